# tanh-KG Command Line Interface

import argparse
import logging
import sys
from typing import List, Optional

import numpy as np
from pydantic import ValidationError

from config import ORACLE_CONFIG, SWEEP_CONFIG
from models import PotentialParams, SweepConfig
from physics.analytic_solver import Branch, amplitudes, transport, wavefunction_grid
from physics.errors import ScatteringError
from physics.scattering_model import classify_region, dispersion, region_table
from utils.sweep import (plot_script_path, potential_columns, preset_config, render_plot_script,
                         render_potential_csv, render_sweep_csv, render_wavefunction_csv, run_sweep,
                         step_limit_report, verify_instance, verify_random, write_text)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PHYSICS = 2
EXIT_IO = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """引数エラーは終了コード 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(args) -> PotentialParams:
    defaults = PotentialParams()
    return PotentialParams(
        a=defaults.a if args.a is None else args.a,
        b=defaults.b if args.b is None else args.b,
        m=defaults.m if args.m is None else args.m,
    )


def _c(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _emit(text: str, output: str) -> None:
    if output == "-":
        sys.stdout.write(text)
    else:
        write_text(output, text)
        print(f"wrote {output}")


def cmd_coeffs(args) -> int:
    """1点の散乱係数レポート"""
    params = _params(args)
    E = args.E
    disp = dispersion(params, E)
    result = transport(params, E)
    amps = amplitudes(params, E)
    print(f"E            = {E:.12g}")
    print(f"a, b, m      = {params.a:g}, {params.b:g}, {params.m:g}")
    print(f"nu           = {_c(disp.nu)}")
    print(f"mu           = {_c(disp.mu)}")
    print(f"lambda       = {_c(disp.lam)}")
    print(f"A            = {_c(amps.A)}")
    print(f"B            = {_c(amps.B)}")
    print(f"R            = {result.R:.15g}")
    print(f"T            = {result.T:.15g}")
    print(f"R + T        = {result.R + result.T:.15g}")
    print(f"region       = {result.region.label}{' (mirrored)' if result.region.mirrored else ''}")
    print(f"superradiant = {'true' if result.superradiant else 'false'}")
    return EXIT_OK


def _sweep_config(args) -> SweepConfig:
    overrides = {
        "a": args.a, "b": args.b, "m": args.m,
        "e_min": args.e_min, "e_max": args.e_max, "steps": args.steps,
        "exclusion_margin": args.margin, "output_path": args.output,
        "format": args.format, "workers": args.workers,
    }
    if args.fig2 or args.fig3:
        return preset_config("fig2" if args.fig2 else "fig3", **overrides)
    if args.e_min is None or args.e_max is None:
        raise UsageError("--e-min and --e-max are required without a preset")
    params = _params(args)
    values = {k: v for k, v in overrides.items() if v is not None}
    values.update({"a": params.a, "b": params.b, "m": params.m})
    values.setdefault("steps", SWEEP_CONFIG["steps"])
    values.setdefault("exclusion_margin", SWEEP_CONFIG["exclusion_margin"])
    return SweepConfig(**values)


def cmd_sweep(args) -> int:
    """R(E), T(E) のスイープを CSV に出力"""
    config = _sweep_config(args)
    if config.format == "plot-script" and config.output_path == "-":
        raise UsageError("--format plot-script needs a file --output")
    rows = run_sweep(config)
    _emit(render_sweep_csv(rows), config.output_path)
    if config.format == "plot-script":
        script = plot_script_path(config.output_path)
        write_text(script, render_plot_script(config))
        print(f"wrote {script}")
    return EXIT_OK


def cmd_verify(args) -> int:
    """解析解とODEオラクルの比較（または階段極限の確認）"""
    if args.step_limit:
        if args.E is None:
            raise UsageError("--step-limit needs --E")
        params = _params(args)
        report = step_limit_report(params.a, params.m, args.E)
        print(f"R_step = {report.R_step:.15g}")
        for b, deviation in zip(report.b_values, report.deviations):
            print(f"b = {b:<10g} |R(b) - R_step| = {deviation:.3e}")
        print(f"monotone = {'true' if report.monotone else 'false'}")
        print("PASS" if report.passed else "FAIL")
        return EXIT_OK if report.passed else EXIT_VERIFY

    if args.E is not None:
        records = [verify_instance(_params(args), args.E, args.tol, args.oracle_tol)]
    else:
        records = verify_random(args.n, args.seed, args.tol, args.oracle_tol)

    for i, record in enumerate(records):
        p = record.params
        print(f"#{i:<3d} a={p.a:.4f} b={p.b:.4f} m={p.m:.4f} E={record.E:.6f} "
              f"|dR|={record.dR:.3e} |dT|={record.dT:.3e} {'ok' if record.passed else 'FAIL'}")
    failed = sum(not r.passed for r in records)
    print(f"{'PASS' if failed == 0 else 'FAIL'}: {len(records) - failed}/{len(records)} within tol={args.tol:g}")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def cmd_wavefunction(args) -> int:
    """波動関数とカレントを CSV に出力"""
    if args.points < 1:
        raise UsageError("--points must be >= 1")
    params = _params(args)
    xs = np.linspace(args.xmin, args.xmax, args.points)
    samples = wavefunction_grid(params, args.E, xs, Branch(args.branch))
    _emit(render_wavefunction_csv(samples), args.output)
    return EXIT_OK


def cmd_regions(args) -> int:
    """エネルギー領域表"""
    params = _params(args)
    print(f"{'interval':<28} {'region':<22} {'nu':<8} {'mu':<8}")
    for row in region_table(params):
        interval = f"({row['lower']:g}, {row['upper']:g})"
        nu = f"{row['nu_sign']}{row['nu_kind']}"
        mu = f"{row['mu_sign']}{row['mu_kind']}"
        print(f"{interval:<28} {row['region']:<22} {nu:<8} {mu:<8}")
    if args.E is not None:
        region = classify_region(params, args.E)
        print(f"E = {args.E:g}: {region.label}{' (boundary)' if region.boundary else ''}")
    return EXIT_OK


def cmd_potential(args) -> int:
    """V(x) のプロファイル（--fig1 で a=5, b=2 と b=50）"""
    if args.fig1:
        preset = SWEEP_CONFIG["potential_preset"]
        xs = np.linspace(preset["x_min"], preset["x_max"], preset["points"])
        columns = potential_columns(preset["a"], preset["b_values"], 1.0, xs)
    else:
        params = _params(args)
        xs = np.linspace(args.xmin, args.xmax, args.points)
        columns = potential_columns(params.a, [params.b], params.m, xs)
        columns = {"V": next(iter(columns.values()))}
    _emit(render_potential_csv(xs, columns), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    physics = _Parser(add_help=False)
    physics.add_argument("--a", type=float, help="potential height a")
    physics.add_argument("--b", type=float, help="smoothness b (> 0)")
    physics.add_argument("--m", type=float, help="particle mass m (>= 0)")
    physics.add_argument("--verbose", "-v", action="store_true")

    parser = _Parser(prog="tanhkg", description="Klein-Gordon scattering by V(x) = a tanh(bx)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[physics], help="single-point R, T report")
    p.add_argument("--E", type=float, required=True)
    p.set_defaults(handler=cmd_coeffs)

    p = sub.add_parser("sweep", parents=[physics], help="R(E), T(E) sweep to CSV")
    presets = p.add_mutually_exclusive_group()
    presets.add_argument("--fig2", action="store_true", help="a=5, b=2, m=1, E in [1.05, 10]")
    presets.add_argument("--fig3", action="store_true", help="a=5, b=50, m=1, E in [1.05, 10]")
    p.add_argument("--e-min", type=float)
    p.add_argument("--e-max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--margin", type=float, help="threshold exclusion margin")
    p.add_argument("--output", "-o", default="sweep.csv", help="CSV path or - for stdout")
    p.add_argument("--format", choices=["csv", "plot-script"], default="csv")
    p.add_argument("--workers", type=int, default=SWEEP_CONFIG["workers"])
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify", parents=[physics], help="analytic vs ODE oracle")
    p.add_argument("--n", type=int, default=SWEEP_CONFIG["verify_n"])
    p.add_argument("--seed", type=int, default=SWEEP_CONFIG["verify_seed"])
    p.add_argument("--tol", type=float, default=SWEEP_CONFIG["verify_tol"])
    p.add_argument("--oracle-tol", type=float, default=ORACLE_CONFIG["tol"])
    p.add_argument("--E", type=float)
    p.add_argument("--step-limit", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("wavefunction", parents=[physics], help="wavefunction samples to CSV")
    p.add_argument("--E", type=float, required=True)
    p.add_argument("--xmin", type=float, default=-4.0)
    p.add_argument("--xmax", type=float, default=4.0)
    p.add_argument("--points", type=int, default=81)
    p.add_argument("--branch", choices=[b.value for b in Branch], default=Branch.TOTAL.value)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(handler=cmd_wavefunction)

    p = sub.add_parser("regions", parents=[physics], help="energy region table")
    p.add_argument("--E", type=float)
    p.set_defaults(handler=cmd_regions)

    p = sub.add_parser("potential", parents=[physics], help="potential profile to CSV")
    p.add_argument("--fig1", action="store_true", help="a=5 with b=2 and b=50")
    p.add_argument("--xmin", type=float, default=-3.0)
    p.add_argument("--xmax", type=float, default=3.0)
    p.add_argument("--points", type=int, default=601)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(handler=cmd_potential)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s %(message)s")
    try:
        return args.handler(args)
    except (UsageError, ValidationError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ScatteringError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PHYSICS
    except OSError as e:
        print(f"I/O error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
