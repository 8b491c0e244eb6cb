# Scattering coefficients tool

import logging
import time
from typing import Any, Dict

from models import MCPResponse
from physics.analytic_solver import amplitudes, transport
from physics.scattering_model import dispersion
from utils.tool_util import elapsed_ms, potential_params, run_blocking, standardize_arguments

logger = logging.getLogger(__name__)


async def scattering_coefficients(params: Dict[str, Any]) -> MCPResponse:
    """1エネルギー点の ν, μ, λ, A, B, R, T"""
    start_time = time.time()
    logger.info(f"[scattering_coefficients] === FUNCTION START === {params}")

    # Try外で初期化（エラー時情報保持）
    tool_debug = {
        "request": params,
        "standardize_parameter": None,
        "dispersion": None,
        "amplitudes": None,
        "region": None,
        "error": None,
        "error_type": None,
        "execution_time_ms": None,
    }

    try:
        args = standardize_arguments(params, ("a", "b", "m", "E"), tool_debug)
        physics = potential_params(args)
        E = args["E"]

        result = await run_blocking(transport, physics, E)
        amps = await run_blocking(amplitudes, physics, E)
        disp = dispersion(physics, E)

        tool_debug["dispersion"] = {"nu": str(disp.nu), "mu": str(disp.mu), "lambda": str(disp.lam)}
        tool_debug["amplitudes"] = {"A": str(amps.A), "B": str(amps.B)}
        tool_debug["region"] = result.region.label
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)

        result_text = (
            f"E={E:g} (a={physics.a:g}, b={physics.b:g}, m={physics.m:g}): "
            f"R={result.R:.15g}, T={result.T:.15g}, region={result.region.label}, "
            f"superradiant={'true' if result.superradiant else 'false'}"
        )
        logger.info(f"[scattering_coefficients] === FUNCTION END === {result_text}")
        return MCPResponse(result=result_text, debug_response=tool_debug)

    except Exception as e:
        tool_debug["error"] = str(e)
        tool_debug["error_type"] = type(e).__name__
        tool_debug["execution_time_ms"] = elapsed_ms(start_time)
        logger.info(f"[scattering_coefficients] === FUNCTION END (ERROR) === {e}")
        return MCPResponse(result=f"散乱係数計算エラー: {str(e)}", debug_response=tool_debug, error=str(e))
