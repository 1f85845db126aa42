from fractions import Fraction as F

import numpy as np
import pytest

from hbarlpt.numeric import (
    NoBoundStateError,
    SolverConfig,
    count_nodes,
    debye_problem,
    default_config,
    integrate_outward,
    matching_defect,
    oscillator_problem,
    radial_function,
    solve_eigenvalue,
)
from hbarlpt.oscillator import OscillatorPotential, oscillator_series
from hbarlpt.tables import QuantumNumbers


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(r_min=1.0, r_max=0.5)
    with pytest.raises(ValueError):
        SolverConfig(r_min=1e-6, r_max=10, mesh_points=10)
    with pytest.raises(ValueError):
        SolverConfig(r_min=1e-6, r_max=10, energy_bracket=(0.0, -1.0))


def test_default_config_scales():
    cfg = default_config(debye_problem(1, 0.2, 0, 0))
    assert cfg.r_max == pytest.approx(200.0)
    assert cfg.energy_bracket == (-0.75, 0.0)
    cfg = default_config(debye_problem(1, 0.02, 1, 1))
    assert cfg.r_max == pytest.approx(2000.0)
    cfg = default_config(oscillator_problem(1.0, (), 0, 0))
    assert cfg.r_max == pytest.approx(15 * np.sqrt(3))
    assert cfg.energy_bracket == (0.0, 4.5)


def test_outward_node_counts():
    p = debye_problem(1, 0, 0, 0)
    cfg = default_config(p)
    assert integrate_outward(p, cfg, -0.5)[0] == 0
    assert integrate_outward(p, cfg, -0.120)[0] >= 1


def test_outward_at_tabulated_debye_level():
    p = debye_problem(1, 0.2, 0, 0)
    cfg = default_config(p)
    nodes, _ = integrate_outward(p, cfg, -0.3268085112)
    assert nodes == 0
    at_level = abs(matching_defect(p, cfg, -0.3268085112))
    away = abs(matching_defect(p, cfg, -0.3168085112))
    assert at_level < 1e-6 * away


@pytest.mark.parametrize(
    "args, expected, tol",
    [
        ((1, 0.2, 0, 0), -0.3268085112, 1e-8),
        ((1, 0.02, 1, 1), -0.03785238920, 1e-9),
        ((1, 0.0, 0, 0), -0.5, 1e-10),
    ],
)
def test_solve_examples(args, expected, tol):
    assert solve_eigenvalue(debye_problem(*args)) == pytest.approx(expected, abs=tol)


def test_hydrogen_excited_level_and_nodes():
    p = debye_problem(1, 0, 2, 0)
    E = solve_eigenvalue(p)
    assert E == pytest.approx(-1 / 18, abs=1e-9)
    r, u = radial_function(p, E)
    assert count_nodes(u) == 2
    assert r[0] > 0


def test_harmonic_limit_and_nodes():
    p = oscillator_problem(1.0, (), 2, 1)
    E = solve_eigenvalue(p)
    assert E == pytest.approx(2 * 2 + 1 + 1.5, abs=1e-9)
    _, u = radial_function(p, E)
    assert count_nodes(u) == 2


def test_levels_increase_with_n():
    e0 = solve_eigenvalue(debye_problem(1, 0.05, 0, 1))
    e1 = solve_eigenvalue(debye_problem(1, 0.05, 1, 1))
    assert e0 < e1 < 0


def test_mesh_convergence():
    p = debye_problem(1, 0.2, 0, 0)
    cfg = default_config(p)
    coarse = solve_eigenvalue(p, cfg)
    fine = solve_eigenvalue(p, default_config(p, mesh_points=2 * cfg.mesh_points))
    assert abs(fine - coarse) < 10 * cfg.tolerance


def test_no_bound_state_in_bracket():
    p = debye_problem(1, 0.2, 3, 0)  # too strongly screened for a fourth s level
    with pytest.raises(NoBoundStateError):
        solve_eigenvalue(p)


def test_weak_quartic_agrees_with_series():
    lam = F(1, 1000)
    series, _ = oscillator_series(OscillatorPotential(1, 1, [lam]), QuantumNumbers(0, 0), 10)
    E = solve_eigenvalue(oscillator_problem(1.0, (float(lam),), 0, 0))
    assert E == pytest.approx(float(series.partial_sum(10)), abs=1e-11)
