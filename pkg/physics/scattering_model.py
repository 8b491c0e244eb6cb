"""
Scattering Model
ポテンシャル、分散関係（群速度による符号選択）、エネルギー領域の分類
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Tuple

import numpy as np

from config import NUMERICS_CONFIG
from models import PotentialParams

logger = logging.getLogger(__name__)


class Region(str, Enum):
    FULLY_PROPAGATING = "FullyPropagating"
    TRANSMITTED_EVANESCENT = "TransmittedEvanescent"
    SUPERRADIANT = "Superradiant"
    INCIDENT_EVANESCENT = "IncidentEvanescent"
    NEGATIVE_CONTINUUM = "NegativeContinuum"
    # a < m のときのみ現れる（両チャネル減衰）
    FULLY_EVANESCENT = "FullyEvanescent"


_MIRROR_SWAP = {
    Region.TRANSMITTED_EVANESCENT: Region.INCIDENT_EVANESCENT,
    Region.INCIDENT_EVANESCENT: Region.TRANSMITTED_EVANESCENT,
}


@dataclass(frozen=True)
class Dispersion:
    """左右チャネルの運動量パラメータ ν, μ と指数 λ"""
    nu: complex
    mu: complex
    lam: complex
    nu_propagating: bool
    mu_propagating: bool


@dataclass(frozen=True)
class EnergyRegion:
    region: Region
    boundary: bool = False
    mirrored: bool = False

    @property
    def label(self) -> str:
        return self.region.value

    @property
    def left_propagating(self) -> bool:
        return self.region not in (Region.INCIDENT_EVANESCENT, Region.FULLY_EVANESCENT)

    @property
    def right_propagating(self) -> bool:
        return self.region not in (Region.TRANSMITTED_EVANESCENT, Region.FULLY_EVANESCENT)


def potential_value(params: PotentialParams, x: float) -> float:
    """V(x) = a·tanh(b·x)"""
    return params.a * math.tanh(params.b * x)


def potential_profile(params: PotentialParams, xs) -> np.ndarray:
    """potential_value のベクトル版"""
    return params.a * np.tanh(params.b * np.asarray(xs, dtype=float))


def normalize(params: PotentialParams) -> Tuple[PotentialParams, bool]:
    """鏡映 V(x; -a) = V(-x; a) で a >= 0 にそろえる"""
    if params.a >= 0:
        return params, False
    return PotentialParams(a=-params.a, b=params.b, m=params.m), True


def thresholds(params: PotentialParams) -> Tuple[float, float, float, float]:
    """(-a-m, -a+m, a-m, a+m)"""
    a, m = abs(params.a), params.m
    return (-a - m, -a + m, a - m, a + m)


def _channel_momentum(shift: float, m: float, b: float) -> Tuple[complex, bool]:
    # shift = E ± a。伝播時は符号付き実数、減衰時は +i|.|
    squared = shift * shift - m * m
    if squared >= 0:
        return complex(math.copysign(math.sqrt(squared), shift) / (2.0 * b)), True
    return complex(0.0, math.sqrt(-squared) / (2.0 * b)), False


def dispersion(params: PotentialParams, E: float) -> Dispersion:
    """
    ν = ±√((E+a)² - m²)/(2b), μ = ±√((E-a)² - m²)/(2b), λ = (b + √(b² - 4a²))/(2b)

    符号は群速度条件 ν/(E+a) > 0, μ/(E-a) > 0 から決まる。
    """
    a, b, m = params.a, params.b, params.m
    nu, nu_propagating = _channel_momentum(E + a, m, b)
    mu, mu_propagating = _channel_momentum(E - a, m, b)
    disc = b * b - 4.0 * a * a
    if disc >= 0:
        lam = complex((b + math.sqrt(disc)) / (2.0 * b))
    else:
        lam = complex(0.5, math.sqrt(-disc) / (2.0 * b))
    return Dispersion(nu=nu, mu=mu, lam=lam, nu_propagating=nu_propagating, mu_propagating=mu_propagating)


def is_boundary(params: PotentialParams, E: float) -> bool:
    """E が閾値から相対 1e-9 以内"""
    tol = NUMERICS_CONFIG["threshold_rel_tol"] * max(1.0, abs(E))
    return any(abs(E - t) <= tol for t in thresholds(params))


def classify_region(params: PotentialParams, E: float) -> EnergyRegion:
    """
    エネルギー E の領域判定

    各チャネルの伝播/減衰と ν', μ' の符号で判定する。a > m では
    領域表の5行と一致し、a < m では両チャネル減衰 (FullyEvanescent) もありうる。
    """
    norm, mirrored = normalize(params)
    disp = dispersion(norm, E)

    if disp.nu_propagating and disp.mu_propagating:
        if E + norm.a < 0:
            region = Region.NEGATIVE_CONTINUUM
        elif E - norm.a < 0:
            region = Region.SUPERRADIANT
        else:
            region = Region.FULLY_PROPAGATING
    elif disp.nu_propagating:
        region = Region.TRANSMITTED_EVANESCENT
    elif disp.mu_propagating:
        region = Region.INCIDENT_EVANESCENT
    else:
        region = Region.FULLY_EVANESCENT

    if mirrored:
        region = _MIRROR_SWAP.get(region, region)
    return EnergyRegion(region=region, boundary=is_boundary(norm, E), mirrored=mirrored)


def _sign_label(value: complex, propagating: bool) -> str:
    if not propagating:
        return ""
    return "+" if value.real >= 0 else "-"


def region_table(params: PotentialParams) -> List[Dict[str, Any]]:
    """
    閾値で区切った各エネルギー区間の代表点を分類した表

    Returns:
        List[Dict]: lower, upper, region, nu_sign, nu_kind, mu_sign, mu_kind
    """
    cuts = sorted(set(thresholds(params)))
    edges = [-math.inf] + cuts + [math.inf]
    rows = []
    for lower, upper in zip(edges[:-1], edges[1:]):
        if math.isinf(lower):
            probe = upper - 1.0
        elif math.isinf(upper):
            probe = lower + 1.0
        else:
            probe = 0.5 * (lower + upper)
        disp = dispersion(params, probe)
        rows.append({
            "lower": lower,
            "upper": upper,
            "region": classify_region(params, probe).label,
            "nu_sign": _sign_label(disp.nu, disp.nu_propagating),
            "nu_kind": "real" if disp.nu_propagating else "imag",
            "mu_sign": _sign_label(disp.mu, disp.mu_propagating),
            "mu_kind": "real" if disp.mu_propagating else "imag",
        })
    # 表は高エネルギー側から並べる
    rows.reverse()
    logger.debug(f"[region_table] a={params.a} m={params.m}: {[r['region'] for r in rows]}")
    return rows
