"""
ODE Oracle
Klein-Gordon 方程式を直接数値積分して R, T を求める独立検証系

透過側 x = +L から単一平面波 e^{2ibμx} を初期値として x = -L まで積分し、
左端で A e^{ikx} + B e^{-ikx} に分解する（境界値問題を1回の初期値問題にする）。
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import DOP853, RK45

from config import ORACLE_CONFIG
from models import PotentialParams
from physics.errors import PropagationError, StiffnessError, ThresholdError
from physics.scattering_model import EnergyRegion, classify_region, dispersion, thresholds
from physics.analytic_solver import Transport

logger = logging.getLogger(__name__)

_SOLVERS = {"RK45": RK45, "DOP853": DOP853}


@dataclass(frozen=True)
class OracleResult:
    R_num: float
    T_num: float
    A_num: complex
    B_num: complex
    # tol と tol/2 の2回積分での R, T の差の2倍（下限 tol）
    est_error: float
    window: float
    steps: int


def _propagating_channels(params: PotentialParams, E: float) -> Tuple[complex, complex, EnergyRegion]:
    region = classify_region(params, E)
    if region.boundary:
        raise ThresholdError(f"E = {E} is at a channel threshold")
    disp = dispersion(params, E)
    if not (disp.nu_propagating and disp.mu_propagating):
        raise PropagationError(f"E = {E}: oracle needs both channels propagating ({region.label})")
    return disp.nu, disp.mu, region


def window_half_width(params: PotentialParams, k_left: float, k_right: float) -> float:
    """e^{-2bL} < 1e-13 かつ最小波数で8ラジアン以上"""
    decay = -math.log(ORACLE_CONFIG["window_decay"]) / (2.0 * params.b)
    return max(decay, 8.0 / min(abs(k_left), abs(k_right)))


def integrate_scattering(params: PotentialParams, E: float, tol: Optional[float] = None,
                         window_scale: float = 1.0, method: Optional[str] = None) -> OracleResult:
    """
    φ'' = -[(E - a·tanh(bx))² - m²] φ を x = +L から -L へ積分

    Args:
        params: ポテンシャルパラメータ
        E: エネルギー
        tol: 局所誤差の相対許容値
        window_scale: 窓幅 L の倍率
        method: "DOP853" または "RK45"

    Raises:
        ThresholdError, PropagationError: 両チャネル伝播でない
        StiffnessError: ステップ数上限超過
    """
    tol = ORACLE_CONFIG["tol"] if tol is None else tol
    method = method or ORACLE_CONFIG["method"]
    max_steps = ORACLE_CONFIG["max_steps"]

    nu, mu, _ = _propagating_channels(params, E)
    a, b, m = params.a, params.b, params.m
    k_left, k_right = 2.0 * b * nu.real, 2.0 * b * mu.real
    L = window_half_width(params, k_left, k_right) * window_scale

    def rhs(x, y):
        v = E - a * math.tanh(b * x)
        return np.array([y[1], -(v * v - m * m) * y[0]])

    start = cmath.exp(1j * k_right * L)
    y0 = np.array([start, 1j * k_right * start], dtype=complex)

    def shoot(rtol: float) -> Tuple[complex, complex, int]:
        solver = _SOLVERS[method](rhs, L, y0, t_bound=-L, rtol=rtol, atol=rtol * 1e-2)
        steps = 0
        while solver.status == "running":
            message = solver.step()
            steps += 1
            if solver.status == "failed":
                raise StiffnessError(f"integrator failed at x={solver.t}: {message}")
            if steps > max_steps:
                raise StiffnessError(f"step budget {max_steps} exhausted at x={solver.t}")
        phi, dphi = complex(solver.y[0]), complex(solver.y[1])
        x = -L
        A = 0.5 * (phi + dphi / (1j * k_left)) * cmath.exp(-1j * k_left * x)
        B = 0.5 * (phi - dphi / (1j * k_left)) * cmath.exp(1j * k_left * x)
        return A, B, steps

    def coefficients(A: complex, B: complex) -> Tuple[float, float]:
        return abs(B) ** 2 / abs(A) ** 2, (mu.real / nu.real) / abs(A) ** 2

    A, B, steps = shoot(tol)
    R, T = coefficients(A, B)
    # tol/2 での再積分との差の2倍を粗い解の誤差とみなす
    R_fine, T_fine = coefficients(*shoot(0.5 * tol)[:2])
    est_error = max(2.0 * max(abs(R - R_fine), abs(T - T_fine)), tol)

    logger.debug(f"[integrate_scattering] E={E} L={L:.3f} steps={steps} R={R:.12g} T={T:.12g} "
                 f"est_error={est_error:.2e}")
    return OracleResult(R_num=float(R), T_num=float(T), A_num=A, B_num=B,
                        est_error=float(est_error), window=L, steps=steps)


def step_reference(params: PotentialParams, E: float) -> Transport:
    """
    b -> ∞ の階段ポテンシャル極限

    R = |(ν-μ)/(ν+μ)|², T = (μ/ν)|2ν/(ν+μ)|²（符号付き ν, μ）
    """
    nu, mu, region = _propagating_channels(params, E)
    nu, mu = nu.real, mu.real
    R = ((nu - mu) / (nu + mu)) ** 2
    T = (mu / nu) * (2.0 * nu / (nu + mu)) ** 2
    return Transport(R=R, T=T, region=region, superradiant=T < 0)


def random_instance(rng: np.random.Generator, a_range=(0.5, 5.0), b_range=(0.5, 10.0),
                    m_range=(0.5, 2.0), max_tries: int = 10000) -> Tuple[PotentialParams, float]:
    """両チャネル伝播（波数 >= min_wavenumber）のランダム問題を生成"""
    k_min = ORACLE_CONFIG["min_wavenumber"]
    for _ in range(max_tries):
        a = rng.uniform(*a_range)
        b = rng.uniform(*b_range)
        m = rng.uniform(*m_range)
        cuts = thresholds(PotentialParams(a=a, b=b, m=m))
        E = rng.uniform(cuts[0] - 5.0, cuts[-1] + 5.0)
        k_left2 = (E + a) ** 2 - m * m
        k_right2 = (E - a) ** 2 - m * m
        if min(k_left2, k_right2) >= k_min * k_min:
            return PotentialParams(a=float(a), b=float(b), m=float(m)), float(E)
    raise RuntimeError("random_instance: no propagating instance found")
