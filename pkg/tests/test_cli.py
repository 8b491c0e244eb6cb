import pytest

import cli


def test_coeffs_free_particle(capsys):
    assert cli.main(["coeffs", "--a", "0", "--b", "1", "--m", "1", "--E", "2"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "R            = 0\n" in out
    assert "T            = 1\n" in out
    assert "superradiant = false" in out


def test_coeffs_superradiant(capsys):
    assert cli.main(["coeffs", "--a", "5", "--b", "2", "--m", "1", "--E", "2"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "region       = Superradiant" in out
    assert "superradiant = true" in out


def test_coeffs_at_threshold_is_physics_error(capsys):
    assert cli.main(["coeffs", "--a", "5", "--b", "2", "--m", "1", "--E", "6"]) == cli.EXIT_PHYSICS
    assert "ThresholdError" in capsys.readouterr().err


def test_invalid_parameters_are_usage_errors():
    assert cli.main(["coeffs", "--a", "5", "--b", "-2", "--E", "8"]) == cli.EXIT_USAGE


def test_malformed_flags_exit_with_usage_code():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["coeffs", "--E", "not-a-number"])
    assert excinfo.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["sweep", "--fig2", "--fig3"])
    assert excinfo.value.code == cli.EXIT_USAGE


def test_sweep_requires_range(tmp_path):
    assert cli.main(["sweep", "--a", "5", "--output", str(tmp_path / "s.csv")]) == cli.EXIT_USAGE


def test_sweep_writes_csv(tmp_path):
    output = tmp_path / "sweep.csv"
    code = cli.main(["sweep", "--a", "0", "--b", "1", "--m", "1", "--e-min", "7", "--e-max", "8", "--steps", "2",
                     "--output", str(output)])
    assert code == cli.EXIT_OK
    lines = output.read_bytes().decode("utf-8").split("\n")
    assert lines[0] == "E,R,T,region,superradiant"
    assert lines[1].startswith("7,0,")
    assert lines[1].endswith(",FullyPropagating,false")
    assert lines[3] == ""


def test_sweep_preset_with_plot_script(tmp_path):
    output = tmp_path / "fig3.csv"
    code = cli.main(["sweep", "--fig3", "--steps", "20", "--format", "plot-script", "--output", str(output)])
    assert code == cli.EXIT_OK
    assert output.exists()
    assert (tmp_path / "fig3_plot.py").exists()


def test_sweep_unwritable_output_is_io_error(tmp_path):
    target = tmp_path / "missing" / "sweep.csv"
    code = cli.main(["sweep", "--fig2", "--steps", "3", "--output", str(target)])
    assert code == cli.EXIT_IO


def test_verify_single_point(capsys):
    assert cli.main(["verify", "--a", "0", "--E", "2"]) == cli.EXIT_OK
    assert "PASS" in capsys.readouterr().out


def test_verify_failure_exit_code():
    assert cli.main(["verify", "--a", "5", "--b", "2", "--E", "8", "--tol", "1e-30"]) == cli.EXIT_VERIFY


def test_verify_step_limit(capsys):
    assert cli.main(["verify", "--step-limit", "--a", "5", "--m", "1", "--E", "8"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "monotone = true" in out


def test_wavefunction_stdout(capsys):
    code = cli.main(["wavefunction", "--a", "5", "--b", "2", "--E", "8", "--xmin", "0", "--xmax", "0",
                     "--points", "1"])
    assert code == cli.EXIT_OK
    lines = capsys.readouterr().out.split("\n")
    assert lines[0] == "x,phi_re,phi_im,dphi_re,dphi_im,current"
    assert lines[1].startswith("0,")
    assert len(lines) == 3


def test_regions_table(capsys):
    assert cli.main(["regions", "--a", "5", "--m", "1", "--E", "6"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    for label in ("FullyPropagating", "TransmittedEvanescent", "Superradiant", "IncidentEvanescent",
                  "NegativeContinuum"):
        assert label in out
    assert "(boundary)" in out


def test_potential_fig1(capsys):
    assert cli.main(["potential", "--fig1"]) == cli.EXIT_OK
    lines = capsys.readouterr().out.split("\n")
    assert lines[0] == "x,V_b2,V_b50"
    assert len(lines) == 603


def test_wavefunction_kernel_overflow_is_physics_error(capsys):
    code = cli.main(["wavefunction", "--a", "5", "--b", "2", "--m", "1", "--E", "8", "--branch", "incident",
                     "--xmin", "300", "--xmax", "400", "--points", "2"])
    assert code == cli.EXIT_PHYSICS
    assert "AmplitudeRangeError" in capsys.readouterr().err


def test_plot_script_to_stdout_is_rejected_before_sweeping(capsys):
    code = cli.main(["sweep", "--fig2", "--steps", "3", "--format", "plot-script", "--output", "-"])
    assert code == cli.EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "plot-script" in captured.err
