import math

import numpy as np
import pytest

from config import ORACLE_CONFIG
from models import PotentialParams
from physics.analytic_solver import transport
from physics.errors import PropagationError, StiffnessError, ThresholdError
from physics.ode_oracle import integrate_scattering, random_instance, step_reference, window_half_width

FIG2 = PotentialParams(a=5.0, b=2.0, m=1.0)
FREE = PotentialParams(a=0.0, b=1.0, m=1.0)


def test_free_particle_oracle():
    result = integrate_scattering(FREE, 2.0, tol=1e-12)
    assert result.R_num <= 1e-10
    assert abs(result.T_num - 1.0) <= 1e-10


@pytest.mark.parametrize("E", [8.0, 2.0, 9.3, -8.0])
def test_oracle_agrees_with_closed_form(E):
    analytic = transport(FIG2, E)
    oracle = integrate_scattering(FIG2, E)
    assert abs(analytic.R - oracle.R_num) <= 1e-6
    assert abs(analytic.T - oracle.T_num) <= 1e-6
    assert oracle.est_error <= 1e-6


def test_oracle_sees_superradiance():
    oracle = integrate_scattering(FIG2, 2.0)
    assert oracle.R_num > 1.0
    assert oracle.T_num < 0.0


def test_random_instances_agree():
    rng = np.random.default_rng(7)
    for _ in range(20):
        params, E = random_instance(rng)
        analytic = transport(params, E)
        oracle = integrate_scattering(params, E)
        assert abs(analytic.R - oracle.R_num) <= 1e-6, (params, E)
        assert abs(analytic.T - oracle.T_num) <= 1e-6, (params, E)


def test_random_instance_is_reproducible_and_propagating():
    first = [random_instance(np.random.default_rng(3)) for _ in range(2)]
    assert first[0] == first[1]
    rng = np.random.default_rng(1)
    for _ in range(50):
        params, E = random_instance(rng)
        assert 0.5 <= params.a <= 5.0 and 0.5 <= params.b <= 10.0 and 0.5 <= params.m <= 2.0
        assert (E + params.a) ** 2 - params.m ** 2 >= 0.25
        assert (E - params.a) ** 2 - params.m ** 2 >= 0.25


def test_tolerance_refinement_is_self_consistent():
    coarse = integrate_scattering(FIG2, 8.0, tol=1e-10)
    fine = integrate_scattering(FIG2, 8.0, tol=5e-11)
    assert abs(coarse.R_num - fine.R_num) <= 10 * 5e-11
    assert abs(coarse.T_num - fine.T_num) <= 10 * 5e-11


@pytest.mark.parametrize("E", [8.0, 2.0])
def test_error_estimate_comes_from_halved_tolerance(E):
    tol = 1e-9
    result = integrate_scattering(FIG2, E, tol=tol)
    halved = integrate_scattering(FIG2, E, tol=tol / 2)
    expected = max(2.0 * max(abs(result.R_num - halved.R_num), abs(result.T_num - halved.T_num)), tol)
    assert result.est_error == pytest.approx(expected, rel=1e-12)
    assert result.est_error >= tol
    assert result.est_error <= 1e-6
    assert abs(result.R_num + result.T_num - 1.0) <= 10 * result.est_error


def test_oracle_result_holds_builtin_floats():
    result = integrate_scattering(FIG2, 8.0)
    assert type(result.R_num) is float
    assert type(result.T_num) is float
    assert type(result.est_error) is float


def test_window_insensitivity():
    base = integrate_scattering(FIG2, 8.0, tol=1e-11)
    wide = integrate_scattering(FIG2, 8.0, tol=1e-11, window_scale=1.25)
    assert wide.window == pytest.approx(1.25 * base.window)
    assert abs(base.R_num - wide.R_num) <= 1e-8


def test_rk45_method_is_selectable():
    result = integrate_scattering(FIG2, 8.0, tol=1e-8, method="RK45")
    assert abs(result.R_num - transport(FIG2, 8.0).R) <= 1e-5


def test_window_half_width():
    params = PotentialParams(a=5.0, b=2.0, m=1.0)
    assert window_half_width(params, 10.0, 10.0) == pytest.approx(-math.log(1e-13) / 4.0)
    assert window_half_width(params, 10.0, 0.5) == pytest.approx(16.0)


def test_step_budget_raises(monkeypatch):
    monkeypatch.setitem(ORACLE_CONFIG, "max_steps", 5)
    with pytest.raises(StiffnessError):
        integrate_scattering(FIG2, 8.0)


def test_oracle_requires_propagating_channels():
    with pytest.raises(PropagationError):
        integrate_scattering(FIG2, 5.0)
    with pytest.raises(ThresholdError):
        integrate_scattering(FIG2, 6.0)


def test_step_reference_free_particle():
    result = step_reference(FREE, 3.0)
    assert result.R == 0.0
    assert result.T == 1.0


def _plane_wave_matching(k_left: float, k_right: float):
    # 1 + r = t, k_L (1 - r) = k_R t
    matrix = np.array([[1.0, -1.0], [k_left, k_right]])
    rhs = np.array([-1.0, k_left])
    r, t = np.linalg.solve(matrix, rhs)
    return r * r, (k_right / k_left) * t * t


@pytest.mark.parametrize("E", [8.0, 9.5, 2.0, 3.0, -8.0])
def test_step_reference_matches_plane_wave_matching(E):
    result = step_reference(FIG2, E)
    k_left = math.copysign(math.sqrt((E + 5.0) ** 2 - 1.0), E + 5.0)
    k_right = math.copysign(math.sqrt((E - 5.0) ** 2 - 1.0), E - 5.0)
    R, T = _plane_wave_matching(k_left, k_right)
    assert result.R == pytest.approx(R, rel=1e-12)
    assert result.T == pytest.approx(T, rel=1e-12)
    assert result.R + result.T == pytest.approx(1.0, rel=1e-12)


def test_step_reference_superradiant_value():
    result = step_reference(FIG2, 2.0)
    expected = ((math.sqrt(48) + math.sqrt(8)) / (math.sqrt(48) - math.sqrt(8))) ** 2
    assert result.R == pytest.approx(expected, rel=1e-12)
    assert result.superradiant
