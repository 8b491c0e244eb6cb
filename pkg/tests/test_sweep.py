import math

import pytest
from pydantic import ValidationError

from models import PotentialParams, SweepConfig
from utils.sweep import (SWEEP_HEADER, compute_row, energy_grid, fmt, plot_script_path, potential_columns,
                         preset_config, render_plot_script, render_potential_csv, render_sweep_csv, run_sweep,
                         step_limit_report, verify_instance, verify_random)

FIG2 = PotentialParams(a=5.0, b=2.0, m=1.0)


def test_presets_match_figure_parameters():
    fig2 = preset_config("fig2")
    assert (fig2.a, fig2.b, fig2.m, fig2.e_min, fig2.e_max, fig2.steps) == (5.0, 2.0, 1.0, 1.05, 10.0, 500)
    fig3 = preset_config("fig3", steps=50)
    assert fig3.b == 50.0
    assert fig3.steps == 50


def test_sweep_config_validation():
    with pytest.raises(ValidationError):
        SweepConfig(a=5, b=2, m=1, e_min=3, e_max=3, steps=10)
    with pytest.raises(ValidationError):
        SweepConfig(a=5, b=2, m=1, e_min=1, e_max=3, steps=1)
    with pytest.raises(ValidationError):
        SweepConfig(a=5, b=0, m=1, e_min=1, e_max=3, steps=10)


def test_energy_grid_endpoints():
    grid = energy_grid(preset_config("fig2"))
    assert len(grid) == 500
    assert grid[0] == 1.05 and grid[-1] == 10.0


def test_fig2_sweep_properties():
    rows = run_sweep(preset_config("fig2", exclusion_margin=0.05))
    assert len(rows) == 500
    assert [row.E for row in rows] == sorted(row.E for row in rows)
    for row in rows:
        if abs(row.E - 4.0) <= 0.05 or abs(row.E - 6.0) <= 0.05:
            assert row.R is None and row.T is None
            continue
        assert row.R is not None
        if row.E < 4.0:
            assert row.superradiant and row.R > 1.0 and row.T < 0.0
            assert row.region == "Superradiant"
        elif row.E < 6.0:
            assert abs(row.R - 1.0) <= 1e-10 and row.T == 0.0
            assert row.region == "TransmittedEvanescent"
        else:
            assert not row.superradiant
            assert row.region == "FullyPropagating"
        if row.T != 0.0:
            assert abs(row.R + row.T - 1.0) <= 1e-10 * max(1.0, row.R)


def test_free_particle_two_point_sweep():
    config = SweepConfig(a=0.0, b=1.0, m=1.0, e_min=7.0, e_max=8.0, steps=2)
    rows = run_sweep(config)
    assert [row.E for row in rows] == [7.0, 8.0]
    for row in rows:
        assert row.R == 0.0
        assert abs(row.T - 1.0) <= 1e-12


def test_compute_row_blanks_threshold_neighbourhood():
    row = compute_row(FIG2, 6.01, 0.02)
    assert row.R is None and row.T is None and row.superradiant is None
    assert row.region == "FullyPropagating"


def test_compute_row_blanks_incident_evanescent():
    row = compute_row(FIG2, -5.0, 0.02)
    assert row.R is None
    assert row.region == "IncidentEvanescent"


def test_sweep_csv_is_deterministic():
    config = preset_config("fig3", steps=40)
    first = render_sweep_csv(run_sweep(config))
    second = render_sweep_csv(run_sweep(config))
    assert first == second
    lines = first.split("\n")
    assert lines[0] == "E,R,T,region,superradiant"
    assert lines[-1] == ""
    assert len(lines) == 42
    assert "\r" not in first


def test_parallel_sweep_matches_serial():
    serial = render_sweep_csv(run_sweep(preset_config("fig2", steps=60)))
    parallel = render_sweep_csv(run_sweep(preset_config("fig2", steps=60, workers=2)))
    assert serial == parallel


def test_sweep_csv_blank_fields():
    config = SweepConfig(a=5.0, b=2.0, m=1.0, e_min=5.5, e_max=6.5, steps=3)
    text = render_sweep_csv(run_sweep(config))
    assert text.split("\n")[2] == "6,,,FullyPropagating,"


def test_fmt_round_trips_doubles():
    for value in (1.05, 0.1, 1 / 3, 2.220446049250313e-16, -7.5e300):
        assert float(fmt(value)) == value
    assert fmt(None) == ""
    assert SWEEP_HEADER == ["E", "R", "T", "region", "superradiant"]


def test_potential_columns_and_csv():
    xs = [-3.0, 0.0, 3.0]
    columns = potential_columns(5.0, (2.0, 50.0), 1.0, xs)
    assert list(columns) == ["V_b2", "V_b50"]
    text = render_potential_csv(xs, columns)
    lines = text.split("\n")
    assert lines[0] == "x,V_b2,V_b50"
    assert lines[2] == "0,0,0"
    assert float(lines[3].split(",")[2]) == 5.0


def test_plot_script():
    config = preset_config("fig2", output_path="out/fig2.csv", format="plot-script")
    assert plot_script_path(config.output_path) == "out/fig2_plot.py"
    script = render_plot_script(config)
    assert "'fig2.csv'" in script
    assert "'fig2.png'" in script
    assert "matplotlib" in script
    compile(script, "fig2_plot.py", "exec")


def test_verify_instance():
    record = verify_instance(FIG2, 8.0, 1e-6)
    assert record.passed
    assert record.dR <= 1e-6 and record.dT <= 1e-6


def test_verify_record_fields_are_builtin_types():
    record = verify_instance(FIG2, 8.0, 1e-6)
    assert type(record.passed) is bool
    assert type(record.R_num) is float
    assert type(record.T_num) is float
    assert type(record.dR) is float


def test_verify_random_default_seed():
    records = verify_random(3, 7, 1e-6)
    assert len(records) == 3
    assert all(record.passed for record in records)


def test_step_limit_is_monotone():
    report = step_limit_report(5.0, 1.0, 8.0)
    assert report.b_values == (10.0, 100.0, 1000.0, 10000.0)
    assert report.monotone
    assert report.passed
    assert report.deviations[-1] <= 1e-3
    assert report.R_step == pytest.approx(((math.sqrt(168) - math.sqrt(8)) / (math.sqrt(168) + math.sqrt(8))) ** 2)
