# Wavefunction samples tool

import logging
import time
from typing import Any, Dict

import numpy as np

from models import MCPResponse
from physics.analytic_solver import Branch, wavefunction_grid
from utils.sweep import render_wavefunction_csv
from utils.tool_util import elapsed_ms, potential_params, run_blocking, standardize_arguments

logger = logging.getLogger(__name__)


async def wavefunction_samples(params: Dict[str, Any]) -> MCPResponse:
    """波動関数 φ, φ' とカレントを CSV テキストで返す"""
    start_time = time.time()
    logger.info(f"[wavefunction_samples] === FUNCTION START === {params}")

    tool_debug = {
        "request": params,
        "standardize_parameter": None,
        "results_count": None,
        "current_spread": None,
        "error": None,
        "error_type": None,
        "execution_time_ms": None,
    }

    try:
        args = standardize_arguments(params, ("a", "b", "m", "E", "xmin", "xmax"), tool_debug)
        xs = np.linspace(args.get("xmin", -4.0), args.get("xmax", 4.0), int(args.get("points", 81)))
        branch = Branch(args.get("branch", Branch.TOTAL.value))

        samples = await run_blocking(wavefunction_grid, potential_params(args), args["E"], xs, branch)
        currents = [s.current for s in samples]
        tool_debug["results_count"] = len(samples)
        tool_debug["current_spread"] = max(currents) - min(currents)
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)

        logger.info(f"[wavefunction_samples] === FUNCTION END === {len(samples)} samples")
        return MCPResponse(result=render_wavefunction_csv(samples), debug_response=tool_debug)

    except Exception as e:
        tool_debug["error"] = str(e)
        tool_debug["error_type"] = type(e).__name__
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)
        logger.info(f"[wavefunction_samples] === FUNCTION END (ERROR) === {e}")
        return MCPResponse(result=f"波動関数計算エラー: {str(e)}", debug_response=tool_debug, error=str(e))
