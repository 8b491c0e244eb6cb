# Energy sweep tool

import logging
import time
from typing import Any, Dict

from config import SWEEP_CONFIG
from models import MCPResponse, SweepConfig
from utils.sweep import preset_config, render_sweep_csv, run_sweep
from utils.tool_util import elapsed_ms, run_blocking, standardize_arguments

logger = logging.getLogger(__name__)

_NUMERIC = ("a", "b", "m", "e_min", "e_max", "exclusion_margin")


async def energy_sweep(params: Dict[str, Any]) -> MCPResponse:
    """R(E), T(E) スイープを CSV テキストで返す"""
    start_time = time.time()
    logger.info(f"[energy_sweep] === FUNCTION START === {params}")

    tool_debug = {
        "request": params,
        "standardize_parameter": None,
        "config": None,
        "results_count": None,
        "skipped_rows": None,
        "superradiant_rows": None,
        "max_unitarity_defect": None,
        "error": None,
        "error_type": None,
        "execution_time_ms": None,
    }

    try:
        args = standardize_arguments(params, _NUMERIC, tool_debug)
        if "steps" in args:
            args["steps"] = int(args["steps"])
        preset = args.pop("preset", None)
        if preset:
            config = preset_config(preset, **args)
        else:
            args.setdefault("steps", SWEEP_CONFIG["steps"])
            config = SweepConfig(**args)
        tool_debug["config"] = config.model_dump()

        rows = await run_blocking(run_sweep, config)
        computed = [row for row in rows if row.R is not None]
        tool_debug["results_count"] = len(rows)
        tool_debug["skipped_rows"] = len(rows) - len(computed)
        tool_debug["superradiant_rows"] = sum(1 for row in computed if row.superradiant)
        tool_debug["max_unitarity_defect"] = max((abs(row.R + row.T - 1.0) for row in computed), default=None)
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)

        logger.info(f"[energy_sweep] === FUNCTION END === {len(rows)} rows")
        return MCPResponse(result=render_sweep_csv(rows), debug_response=tool_debug)

    except Exception as e:
        tool_debug["error"] = str(e)
        tool_debug["error_type"] = type(e).__name__
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)
        logger.info(f"[energy_sweep] === FUNCTION END (ERROR) === {e}")
        return MCPResponse(result=f"スイープエラー: {str(e)}", debug_response=tool_debug, error=str(e))
