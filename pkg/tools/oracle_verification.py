# Oracle verification tool

import logging
import time
from typing import Any, Dict

from config import SWEEP_CONFIG
from models import MCPResponse
from utils.sweep import verify_instance, verify_random
from utils.tool_util import elapsed_ms, potential_params, run_blocking, standardize_arguments

logger = logging.getLogger(__name__)


async def oracle_verification(params: Dict[str, Any]) -> MCPResponse:
    """解析解と数値積分オラクルの一致を確認"""
    start_time = time.time()
    logger.info(f"[oracle_verification] === FUNCTION START === {params}")

    tool_debug = {
        "request": params,
        "standardize_parameter": None,
        "instances": [],
        "results_count": None,
        "failures": None,
        "error": None,
        "error_type": None,
        "execution_time_ms": None,
    }

    try:
        args = standardize_arguments(params, ("a", "b", "m", "E", "tol"), tool_debug)
        tol = args.get("tol", SWEEP_CONFIG["verify_tol"])
        if "E" in args:
            records = [await run_blocking(verify_instance, potential_params(args), args["E"], tol)]
        else:
            n = int(args.get("n", SWEEP_CONFIG["verify_n"]))
            seed = int(args.get("seed", SWEEP_CONFIG["verify_seed"]))
            records = await run_blocking(verify_random, n, seed, tol)

        tool_debug["instances"] = [
            {"a": r.params.a, "b": r.params.b, "m": r.params.m, "E": r.E, "dR": r.dR, "dT": r.dT, "passed": r.passed}
            for r in records
        ]
        failures = sum(not r.passed for r in records)
        tool_debug["results_count"] = len(records)
        tool_debug["failures"] = failures
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)

        verdict = "PASS" if failures == 0 else "FAIL"
        worst = max(max(r.dR, r.dT) for r in records)
        logger.info(f"[oracle_verification] === FUNCTION END === {verdict}")
        return MCPResponse(
            result=f"{verdict}: {len(records) - failures}/{len(records)} within tol={tol:g} (worst {worst:.3e})",
            debug_response=tool_debug,
        )

    except Exception as e:
        tool_debug["error"] = str(e)
        tool_debug["error_type"] = type(e).__name__
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)
        logger.info(f"[oracle_verification] === FUNCTION END (ERROR) === {e}")
        return MCPResponse(result=f"オラクル検証エラー: {str(e)}", debug_response=tool_debug, error=str(e))
