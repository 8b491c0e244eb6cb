"""
Analytic Solver
閉形式の散乱解：振幅 A, B、反射率 R・透過率 T、波動関数と保存カレント

透過波の係数を 1 に固定する (φ_trans -> e^{2ibμx}, x -> +∞)。
z -> 1/z 接続公式で透過波を左側の2解に分解すると
    φ_trans = A·u_inc + B·u_ref
    A = Γ(1-2iμ)Γ(-2iν) / [Γ(λ-iν-iμ) Γ(1-λ-iν-iμ)]
    B = Γ(1-2iμ)Γ(+2iν) / [Γ(λ+iν-iμ) Γ(1-λ+iν-iμ)]
となる（B は A の ν -> -ν）。ν, μ は群速度で符号を選んだ値を使う。
"""

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from config import NUMERICS_CONFIG
from models import PotentialParams
from physics.errors import AmplitudeRangeError, PropagationError, RepresentationMismatchError, ThresholdError
from physics.scattering_model import Dispersion, EnergyRegion, classify_region, dispersion
from physics.specfun import hyp2f1, hyp2f1_derivative, log_gamma_ratio

logger = logging.getLogger(__name__)


class Branch(str, Enum):
    INCIDENT = "incident"
    REFLECTED = "reflected"
    TRANSMITTED = "transmitted"
    TOTAL = "total"


@dataclass(frozen=True)
class Amplitudes:
    """入射振幅 A と反射振幅 B（透過振幅 = 1）"""
    A: complex
    B: complex
    log_A: complex
    # B が厳密に 0 のとき None
    log_B: Optional[complex]


@dataclass(frozen=True)
class Transport:
    R: float
    T: float
    region: EnergyRegion
    superradiant: bool


@dataclass(frozen=True)
class WavefunctionSample:
    x: float
    phi: complex
    dphi: complex
    branch: Branch

    @property
    def current(self) -> float:
        return current(self.phi, self.dphi)


def current(phi: complex, dphi: complex) -> float:
    """j = Im(φ* φ')。平面波 e^{ikx} は +k を運ぶ"""
    return (phi.conjugate() * dphi).imag


def _checked_exp(log_value: complex, what: str) -> complex:
    if abs(log_value.real) > NUMERICS_CONFIG["log_overflow"]:
        raise AmplitudeRangeError(f"{what}: log-magnitude {log_value.real:.1f} out of range")
    return cmath.exp(log_value)


def _checked_growth(exponent: float, x: float) -> float:
    # e^{±2bx}。下限側はアンダーフローで 0 になるだけ
    if exponent > NUMERICS_CONFIG["log_overflow"]:
        raise AmplitudeRangeError(f"x = {x}: e^{exponent:.1f} overflows; use the other representation")
    return math.exp(exponent)


def _require_scattering_state(params: PotentialParams, E: float) -> Tuple[Dispersion, EnergyRegion]:
    region = classify_region(params, E)
    if region.boundary:
        raise ThresholdError(f"E = {E} is at a channel threshold (a={params.a}, m={params.m})")
    disp = dispersion(params, E)
    if not disp.nu_propagating:
        raise PropagationError(f"E = {E}: incident channel is evanescent ({region.label})")
    if disp.nu == 0 or disp.mu == 0:
        raise ThresholdError(f"E = {E}: vanishing channel momentum")
    return disp, region


def _amplitudes_from(disp: Dispersion) -> Amplitudes:
    nu, mu, lam = disp.nu, disp.mu, disp.lam
    log_A = log_gamma_ratio(
        [1.0 - 2j * mu, -2j * nu],
        [lam - 1j * mu - 1j * nu, 1.0 - lam - 1j * mu - 1j * nu],
    )
    if log_A is None:
        raise ThresholdError("incident amplitude vanishes")
    log_B = log_gamma_ratio(
        [1.0 - 2j * mu, 2j * nu],
        [lam - 1j * mu + 1j * nu, 1.0 - lam - 1j * mu + 1j * nu],
    )
    A = _checked_exp(log_A, "A")
    B = 0j if log_B is None else _checked_exp(log_B, "B")
    return Amplitudes(A=A, B=B, log_A=log_A, log_B=log_B)


def amplitudes(params: PotentialParams, E: float) -> Amplitudes:
    """
    入射・反射振幅 A, B をガンマ関数の対数和から計算

    Raises:
        ThresholdError: E が閾値上
        PropagationError: 入射チャネルが減衰
        AmplitudeRangeError: exp のオーバーフロー
    """
    disp, _ = _require_scattering_state(params, E)
    return _amplitudes_from(disp)


def transport(params: PotentialParams, E: float) -> Transport:
    """
    R = |B|²/|A|², T = (μ/ν)/|A|²

    透過チャネルが減衰する場合、透過カレントは 0 なので T = 0, R = 1。
    """
    disp, region = _require_scattering_state(params, E)
    amps = _amplitudes_from(disp)

    if amps.log_B is None:
        R = 0.0
    else:
        R = math.exp(2.0 * (amps.log_B.real - amps.log_A.real))

    if disp.mu_propagating:
        T = (disp.mu.real / disp.nu.real) * math.exp(-2.0 * amps.log_A.real)
    else:
        # |B| = |A| は解析的に厳密
        logger.debug(f"[transport] E={E}: evanescent transmission, |R-1|={abs(R - 1.0):.3e}")
        R, T = 1.0, 0.0

    return Transport(R=R, T=T, region=region, superradiant=T < 0)


class ScatteringSolution:
    """エネルギー E での大域解。左側表現 (x <= 0) と透過波表現 (x > 0) を持つ"""

    def __init__(self, params: PotentialParams, E: float):
        self.params = params
        self.E = E
        self.disp, self.region = _require_scattering_state(params, E)
        self.amps = _amplitudes_from(self.disp)

    def _left_kernel(self, x: float, sign: int) -> Tuple[complex, complex]:
        # sign=+1: (1+e^{2bx})^λ e^{2ibνx} 2F1(λ+iν-iμ, λ+iν+iμ; 1+2iν; -e^{2bx})
        # sign=-1: ν -> -ν
        b = self.params.b
        nu, mu, lam = sign * self.disp.nu, self.disp.mu, self.disp.lam
        p, q, c = lam + 1j * nu - 1j * mu, lam + 1j * nu + 1j * mu, 1.0 + 2j * nu
        e = _checked_growth(2.0 * b * x, x)
        z = -e
        f = hyp2f1(p, q, c, z)
        df = hyp2f1_derivative(p, q, c, z)
        pref = cmath.exp(2j * b * nu * x + lam * math.log1p(e))
        phi = pref * f
        dphi = pref * ((2j * b * nu + 2.0 * b * lam * e / (1.0 + e)) * f - 2.0 * b * e * df)
        return phi, dphi

    def _transmitted_kernel(self, x: float) -> Tuple[complex, complex]:
        # (1+e^{-2bx})^λ e^{2ibμx} 2F1(λ-iμ+iν, λ-iμ-iν; 1-2iμ; -e^{-2bx})
        b = self.params.b
        nu, mu, lam = self.disp.nu, self.disp.mu, self.disp.lam
        p, q, c = lam - 1j * mu + 1j * nu, lam - 1j * mu - 1j * nu, 1.0 - 2j * mu
        e = _checked_growth(-2.0 * b * x, x)
        w = -e
        f = hyp2f1(p, q, c, w)
        df = hyp2f1_derivative(p, q, c, w)
        pref = cmath.exp(2j * b * mu * x + lam * math.log1p(e))
        phi = pref * f
        dphi = pref * ((2j * b * mu - 2.0 * b * lam * e / (1.0 + e)) * f + 2.0 * b * e * df)
        return phi, dphi

    def sample(self, x: float, branch: Branch = Branch.TOTAL) -> WavefunctionSample:
        branch = Branch(branch)
        if branch == Branch.INCIDENT:
            phi, dphi = self._left_kernel(x, +1)
            phi, dphi = self.amps.A * phi, self.amps.A * dphi
        elif branch == Branch.REFLECTED:
            phi, dphi = self._left_kernel(x, -1)
            phi, dphi = self.amps.B * phi, self.amps.B * dphi
        elif branch == Branch.TRANSMITTED:
            phi, dphi = self._transmitted_kernel(x)
        elif x <= 0:
            phi, dphi = self._left_total(x)
        else:
            phi, dphi = self._transmitted_kernel(x)
        return WavefunctionSample(x=x, phi=phi, dphi=dphi, branch=branch)

    def _left_total(self, x: float) -> Tuple[complex, complex]:
        phi, dphi = self._left_kernel(x, +1)
        phi, dphi = self.amps.A * phi, self.amps.A * dphi
        if self.amps.log_B is not None:
            ref, dref = self._left_kernel(x, -1)
            phi, dphi = phi + self.amps.B * ref, dphi + self.amps.B * dref
        return phi, dphi

    def asymptotic(self, x: float) -> WavefunctionSample:
        """x -> ±∞ の平面波形 A e^{2ibνx} + B e^{-2ibνx} / e^{2ibμx}"""
        b = self.params.b
        if x < 0:
            k = 2.0 * b * self.disp.nu
            inc = self.amps.A * cmath.exp(1j * k * x)
            ref = self.amps.B * cmath.exp(-1j * k * x)
            return WavefunctionSample(x=x, phi=inc + ref, dphi=1j * k * (inc - ref), branch=Branch.TOTAL)
        k = 2.0 * b * self.disp.mu
        phi = cmath.exp(1j * k * x)
        return WavefunctionSample(x=x, phi=phi, dphi=1j * k * phi, branch=Branch.TOTAL)

    def representation_mismatch(self) -> float:
        """x = 0 での二表現の相対差（値と微分の大きい方）"""
        left, dleft = self._left_total(0.0)
        right, dright = self._transmitted_kernel(0.0)
        scale = max(abs(right), 1e-300)
        dscale = max(abs(dright), 1e-300)
        return max(abs(left - right) / scale, abs(dleft - dright) / dscale)


def wavefunction(params: PotentialParams, E: float, x: float, branch: Branch = Branch.TOTAL) -> WavefunctionSample:
    """位置 x での波動関数とその微分"""
    return ScatteringSolution(params, E).sample(x, branch)


def asymptotic_wavefunction(params: PotentialParams, E: float, x: float) -> WavefunctionSample:
    return ScatteringSolution(params, E).asymptotic(x)


def wavefunction_grid(params: PotentialParams, E: float, xs: Iterable[float],
                      branch: Branch = Branch.TOTAL) -> List[WavefunctionSample]:
    """格子上の波動関数（振幅は一度だけ計算）"""
    solution = ScatteringSolution(params, E)
    return [solution.sample(float(x), branch) for x in xs]


def check_representations(params: PotentialParams, E: float, tol: Optional[float] = None) -> float:
    """
    x = 0 で左側表現と透過波表現が一致するかの自己診断

    Returns:
        float: 相対差

    Raises:
        RepresentationMismatchError: 相対差が tol を超えた
    """
    tol = NUMERICS_CONFIG["representation_tol"] if tol is None else tol
    mismatch = ScatteringSolution(params, E).representation_mismatch()
    if mismatch > tol:
        logger.warning(f"[check_representations] E={E} {params}: mismatch {mismatch:.3e} > {tol:.1e}")
        raise RepresentationMismatchError(f"representations differ by {mismatch:.3e} at x = 0")
    logger.debug(f"[check_representations] E={E}: mismatch {mismatch:.3e}")
    return mismatch
