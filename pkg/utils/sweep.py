"""
Sweep Utility
エネルギースイープ、CSV / プロットスクリプト出力、オラクル検証の実行
"""

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import numpy as np

from config import SWEEP_CONFIG
from models import PotentialParams, SweepConfig, SweepRow
from physics.analytic_solver import WavefunctionSample, transport
from physics.errors import ScatteringError
from physics.ode_oracle import integrate_scattering, random_instance, step_reference
from physics.scattering_model import classify_region, potential_profile, thresholds

logger = logging.getLogger(__name__)

SWEEP_HEADER = ["E", "R", "T", "region", "superradiant"]
WAVEFUNCTION_HEADER = ["x", "phi_re", "phi_im", "dphi_re", "dphi_im", "current"]


def fmt(value: Optional[float]) -> str:
    """17桁表記（None は空欄）"""
    if value is None:
        return ""
    return f"{value:.17g}"


def fmt_flag(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def preset_config(name: str, **overrides) -> SweepConfig:
    """図のプリセット（fig2: b=2, fig3: b=50）"""
    values = dict(SWEEP_CONFIG["presets"][name])
    values.update({k: v for k, v in overrides.items() if v is not None})
    return SweepConfig(**values)


def energy_grid(config: SweepConfig) -> np.ndarray:
    return np.linspace(config.e_min, config.e_max, config.steps)


def near_threshold(params: PotentialParams, E: float, margin: float) -> bool:
    return any(abs(E - t) <= margin for t in thresholds(params))


def compute_row(params: PotentialParams, E: float, margin: float) -> SweepRow:
    """1エネルギー点の R, T。閾値近傍・入射減衰では空欄行"""
    region = classify_region(params, E)
    if near_threshold(params, E, margin):
        return SweepRow(E=E, region=region.label)
    try:
        result = transport(params, E)
    except ScatteringError as e:
        logger.debug(f"[compute_row] E={E}: {type(e).__name__}: {e}")
        return SweepRow(E=E, region=region.label)
    return SweepRow(E=E, R=result.R, T=result.T, region=result.region.label, superradiant=result.superradiant)


def _compute_row_args(args) -> SweepRow:
    return compute_row(*args)


def run_sweep(config: SweepConfig) -> List[SweepRow]:
    """
    スイープ実行。行は独立に計算し、インデックス順に並べる

    Returns:
        List[SweepRow]: steps 行
    """
    params = config.params
    jobs = [(params, float(E), config.exclusion_margin) for E in energy_grid(config)]
    logger.info(f"[run_sweep] a={config.a} b={config.b} m={config.m} E=[{config.e_min}, {config.e_max}] "
                f"steps={config.steps} workers={config.workers}")
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(_compute_row_args, jobs, chunksize=max(1, len(jobs) // (4 * config.workers))))
    return [compute_row(*job) for job in jobs]


def _render(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_sweep_csv(rows: Iterable[SweepRow]) -> str:
    return _render(SWEEP_HEADER, (
        [fmt(row.E), fmt(row.R), fmt(row.T), row.region, fmt_flag(row.superradiant)] for row in rows
    ))


def render_wavefunction_csv(samples: Iterable[WavefunctionSample]) -> str:
    return _render(WAVEFUNCTION_HEADER, (
        [fmt(s.x), fmt(s.phi.real), fmt(s.phi.imag), fmt(s.dphi.real), fmt(s.dphi.imag), fmt(s.current)]
        for s in samples
    ))


def render_potential_csv(xs: np.ndarray, columns: dict) -> str:
    header = ["x"] + list(columns)
    return _render(header, (
        [fmt(float(x))] + [fmt(float(values[i])) for values in columns.values()] for i, x in enumerate(xs)
    ))


def potential_columns(a: float, b_values: Sequence[float], m: float, xs: np.ndarray) -> dict:
    """b ごとの V(x) 列（列名 V_b2 など）"""
    return {f"V_b{b:g}": potential_profile(PotentialParams(a=a, b=b, m=m), xs) for b in b_values}


def write_text(path: str, text: str) -> None:
    # 改行は LF 固定
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


PLOT_SCRIPT_TEMPLATE = '''"""Plot R(E) and T(E) from {csv_name} (a={a}, b={b}, m={m})."""
import csv

import matplotlib.pyplot as plt

E, R, T = [], [], []
with open({csv_name!r}, newline="") as handle:
    for row in csv.DictReader(handle):
        if row["R"] == "":
            continue
        E.append(float(row["E"]))
        R.append(float(row["R"]))
        T.append(float(row["T"]))

fig, (ax_r, ax_t) = plt.subplots(1, 2, figsize=(10, 4))
ax_r.plot(E, R)
ax_r.set_xlabel("E")
ax_r.set_ylabel("R")
ax_t.plot(E, T)
ax_t.set_xlabel("E")
ax_t.set_ylabel("T")
fig.suptitle("a={a}, b={b}, m={m}")
fig.tight_layout()
fig.savefig({png_name!r})
plt.show()
'''


def render_plot_script(config: SweepConfig) -> str:
    csv_name = Path(config.output_path).name
    return PLOT_SCRIPT_TEMPLATE.format(csv_name=csv_name, png_name=Path(csv_name).with_suffix(".png").name,
                                       a=config.a, b=config.b, m=config.m)


def plot_script_path(output_path: str) -> str:
    path = Path(output_path)
    return str(path.with_name(f"{path.stem}_plot.py"))


# --- 検証 --- #

@dataclass(frozen=True)
class VerifyRecord:
    params: PotentialParams
    E: float
    R_analytic: float
    T_analytic: float
    R_num: float
    T_num: float
    passed: bool

    @property
    def dR(self) -> float:
        return abs(self.R_analytic - self.R_num)

    @property
    def dT(self) -> float:
        return abs(self.T_analytic - self.T_num)


def verify_instance(params: PotentialParams, E: float, tol: float, oracle_tol: Optional[float] = None) -> VerifyRecord:
    """解析解と数値積分の比較"""
    analytic = transport(params, E)
    oracle = integrate_scattering(params, E, tol=oracle_tol)
    passed = bool(abs(analytic.R - oracle.R_num) <= tol and abs(analytic.T - oracle.T_num) <= tol)
    return VerifyRecord(params=params, E=E, R_analytic=analytic.R, T_analytic=analytic.T,
                        R_num=oracle.R_num, T_num=oracle.T_num, passed=passed)


def verify_random(n: int, seed: int, tol: float, oracle_tol: Optional[float] = None) -> List[VerifyRecord]:
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n):
        params, E = random_instance(rng)
        record = verify_instance(params, E, tol, oracle_tol)
        logger.info(f"[verify_random] #{i} a={params.a:.4f} b={params.b:.4f} m={params.m:.4f} E={E:.4f} "
                    f"dR={record.dR:.2e} dT={record.dT:.2e}")
        records.append(record)
    return records


@dataclass(frozen=True)
class StepLimitReport:
    b_values: tuple
    deviations: tuple
    R_step: float
    tol: float

    @property
    def monotone(self) -> bool:
        return all(later < earlier for earlier, later in zip(self.deviations, self.deviations[1:]))

    @property
    def passed(self) -> bool:
        return self.monotone and self.deviations[-1] <= self.tol


def step_limit_report(a: float, m: float, E: float, b_values: Optional[Sequence[float]] = None,
                      tol: float = 1e-3) -> StepLimitReport:
    """|R(b) - R_step| が b の増加とともに単調減少するか"""
    b_values = tuple(b_values or SWEEP_CONFIG["step_limit_b"])
    R_step = step_reference(PotentialParams(a=a, b=b_values[-1], m=m), E).R
    deviations = tuple(abs(transport(PotentialParams(a=a, b=b, m=m), E).R - R_step) for b in b_values)
    return StepLimitReport(b_values=b_values, deviations=deviations, R_step=R_step, tol=tol)
