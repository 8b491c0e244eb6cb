"""
Special Functions
複素引数の対数ガンマ関数と Gauss 超幾何関数 2F1

散乱解が必要とする範囲（z は実数かつ z <= 0、パラメータは複素数）で
2F1 を評価する。ガンマ関数の積・商はすべて対数空間で扱う。
"""

import cmath
import logging
import math
from typing import Iterable, Optional

import numpy as np

from config import NUMERICS_CONFIG
from physics.errors import DegenerateTransformError, DomainError, NonConvergenceError, PoleError

logger = logging.getLogger(__name__)

Number = complex | float | int

# Lanczos 近似 (g = 7, 9 係数)
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_EPS = float(np.finfo(float).eps)

SERIES = "series"
PFAFF = "pfaff"
INVERSION = "inversion"


def is_gamma_pole(z: Number, tol: Optional[float] = None) -> bool:
    """z が非正整数から tol 以内かどうか"""
    tol = NUMERICS_CONFIG["pole_tol"] if tol is None else tol
    z = complex(z)
    if z.real > tol:
        return False
    nearest = round(z.real)
    return nearest <= 0 and abs(z - nearest) <= tol


def _log_sin_pi(z: complex) -> complex:
    """log(sin(πz))。|Im z| が大きくてもオーバーフローしない"""
    w = math.pi * z
    if abs(w.imag) < 30.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0:
        # sin w = e^{-iw} (e^{2iw} - 1) / (2i)
        return -1j * w + cmath.log((cmath.exp(2j * w) - 1.0) / 2j)
    return 1j * w + cmath.log((1.0 - cmath.exp(-2j * w)) / 2j)


def _log_gamma_lanczos(z: complex) -> complex:
    # Re z >= 0.5 前提
    z -= 1.0
    x = _LANCZOS_COEFFS[0]
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        x += coeff / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def log_gamma(z: Number) -> complex:
    """
    ln Γ(z) の主枝

    Re z < 0.5 では反射公式 Γ(z)Γ(1-z) = π / sin(πz) を使う。

    Args:
        z: 複素引数

    Returns:
        complex: ln Γ(z)

    Raises:
        PoleError: z が非正整数から 1e-12 以内
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma: non-finite argument {z}")
    if is_gamma_pole(z):
        raise PoleError(f"log_gamma: {z} is a pole of Gamma")
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi(z) - _log_gamma_lanczos(1.0 - z)
    return _log_gamma_lanczos(z)


def gamma(z: Number) -> complex:
    """Γ(z) = exp(ln Γ(z))"""
    return cmath.exp(log_gamma(z))


def log_gamma_ratio(numerators: Iterable[Number], denominators: Iterable[Number]) -> Optional[complex]:
    """
    Σ ln Γ(numerators) - Σ ln Γ(denominators)

    分母のいずれかが極の場合、比は厳密に 0 なので None を返す。
    分子が極の場合は PoleError。
    """
    denominators = [complex(d) for d in denominators]
    if any(is_gamma_pole(d) for d in denominators):
        return None
    total = sum((log_gamma(n) for n in numerators), 0j)
    return total - sum((log_gamma(d) for d in denominators), 0j)


def _check_c(c: complex) -> None:
    if is_gamma_pole(c):
        raise PoleError(f"hyp2f1: c = {c} is a non-positive integer")


def _series(p: complex, q: complex, c: complex, z: complex) -> complex:
    """z のべき級数を直接足し合わせる（|z| < 1）"""
    max_terms = NUMERICS_CONFIG["series_max_terms"]
    # 項比が単調減少に転じるまでは打ち切らない
    hump = max(abs(p), abs(q), abs(c))
    term = 1.0 + 0j
    total = 1.0 + 0j
    for n in range(max_terms):
        term *= (p + n) * (q + n) / ((c + n) * (n + 1)) * z
        total += term
        if term == 0:
            return total
        if n >= hump and abs(term) <= _EPS * abs(total):
            return total
    raise NonConvergenceError(
        f"hyp2f1 series: no convergence after {max_terms} terms (p={p}, q={q}, c={c}, z={z})"
    )


def _pfaff(p: complex, q: complex, c: complex, z: complex) -> complex:
    """Pfaff 変換 2F1(p,q;c;z) = (1-z)^{-p} 2F1(p, c-q; c; z/(z-1))"""
    w = z / (z - 1.0)
    return cmath.exp(-p * cmath.log(1.0 - z)) * _series(p, c - q, c, w)


def _inversion(p: complex, q: complex, c: complex, z: complex) -> complex:
    """z -> 1/z 接続公式"""
    diff = p - q
    tol = NUMERICS_CONFIG["degenerate_tol"]
    if abs(diff.imag) <= tol and abs(diff.real - round(diff.real)) <= tol:
        raise DegenerateTransformError(f"hyp2f1 inversion: p - q = {diff} is an integer")

    log_minus_z = cmath.log(-z)
    inv_z = 1.0 / z
    total = 0j
    # 各項 Γ(c)Γ(s'-s)/(Γ(s')Γ(c-s)) (-z)^{-s} 2F1(s, 1-c+s; 1-s'+s; 1/z)
    for s, other in ((p, q), (q, p)):
        log_coeff = log_gamma_ratio([c, other - s], [other, c - s])
        if log_coeff is None:
            logger.debug(f"[hyp2f1] inversion term s={s} vanishes (denominator pole)")
            continue
        weight = cmath.exp(log_coeff - s * log_minus_z)
        total += weight * _series(s, 1.0 - c + s, 1.0 - other + s, inv_z)
    return total


def select_regime(z: Number) -> str:
    """|z| に応じた評価経路"""
    r = abs(complex(z))
    if r <= NUMERICS_CONFIG["series_radius"]:
        return SERIES
    if r <= NUMERICS_CONFIG["pfaff_radius"]:
        return PFAFF
    return INVERSION


def hyp2f1(p: Number, q: Number, c: Number, z: Number, method: Optional[str] = None) -> complex:
    """
    Gauss 超幾何関数 2F1(p, q; c; z)

    Args:
        p, q, c: 複素パラメータ
        z: 評価点（契約範囲は実数 z <= 0）
        method: "series" / "pfaff" / "inversion" を強制する場合に指定

    Returns:
        complex: 2F1 の値

    Raises:
        PoleError: c が非正整数
        DegenerateTransformError: inversion 経路で p - q が整数
        NonConvergenceError: 級数の項数上限超過
        DomainError: 契約外の z
    """
    p, q, c, z = complex(p), complex(q), complex(c), complex(z)
    _check_c(c)
    if z == 0:
        return 1.0 + 0j
    if z.real > 0 and abs(z) > NUMERICS_CONFIG["series_radius"]:
        raise DomainError(f"hyp2f1: z = {z} outside the supported domain (Re z <= 0 or |z| <= 0.5)")

    regime = method or select_regime(z)
    if regime == SERIES:
        if abs(z) >= 1.0:
            raise DomainError(f"hyp2f1 series: |z| = {abs(z)} >= 1")
        value = _series(p, q, c, z)
    elif regime == PFAFF:
        value = _pfaff(p, q, c, z)
    elif regime == INVERSION:
        if abs(z) <= 1.0:
            raise DomainError(f"hyp2f1 inversion: |z| = {abs(z)} <= 1")
        value = _inversion(p, q, c, z)
    else:
        raise ValueError(f"Unknown hyp2f1 method: {regime}")

    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonConvergenceError(f"hyp2f1: non-finite result via {regime} (p={p}, q={q}, c={c}, z={z})")
    return value


def hyp2f1_derivative(p: Number, q: Number, c: Number, z: Number) -> complex:
    """d/dz 2F1(p,q;c;z) = (pq/c) 2F1(p+1, q+1; c+1; z)"""
    p, q, c = complex(p), complex(q), complex(c)
    _check_c(c)
    return p * q / c * hyp2f1(p + 1.0, q + 1.0, c + 1.0, z)
