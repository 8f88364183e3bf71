import math

import numpy as np
import pytest

from mrspec import ConstraintError
from mrspec.oracle import (
    NumerovConfig,
    approximation_error_table,
    numerov_solve,
)
from mrspec.radial import PotentialParams, energy_level


def test_config_validation():
    with pytest.raises(ValueError):
        NumerovConfig(steps=100)
    with pytest.raises(ValueError):
        NumerovConfig(centrifugal_mode="other")
    with pytest.raises(ValueError):
        NumerovConfig(r_min=3.0, r_max=1.0)
    with pytest.raises(ValueError):
        NumerovConfig(energy_tol=0.0)


def test_anchor_energies_default_config(pp_deep, pp_deep_075):
    res = numerov_solve(pp_deep, 0.0, 0)
    assert res.energy == pytest.approx(-0.487578, abs=1e-5)
    assert res.converged and res.n_r_found == 0
    res = numerov_solve(pp_deep_075, 0.0, 0)
    assert res.energy == pytest.approx(-0.872300, abs=1e-5)
    assert res.converged and res.n_r_found == 0


def test_agreement_with_closed_form(pp_deep, pp_deep_075):
    for pp in (pp_deep, pp_deep_075):
        for l, n_r in ((1.0, 0), (2.414214, 1), (0.0, 3), (3.0, 0)):
            sol = energy_level(pp, l * (l + 1.0), n_r)
            res = numerov_solve(pp, l * (l + 1.0), n_r)
            assert abs(res.energy - sol.energy) <= 1e-5
            assert res.n_r_found == n_r
            assert res.converged
            assert res.residual <= NumerovConfig().energy_tol / 2.0


def test_grid_halving_shift(pp_deep):
    # Richardson check: doubling the step count barely moves the eigenvalue
    e1 = numerov_solve(pp_deep, 2.0, 1, NumerovConfig(steps=40000)).energy
    e2 = numerov_solve(pp_deep, 2.0, 1, NumerovConfig(steps=80000)).energy
    assert abs(e1 - e2) <= 1e-7


def test_exact_mode_error_shrinks_with_b():
    # Hulthen-style coupling A = 2b; the centrifugal replacement improves
    # as the potential range grows
    deltas = []
    for b in (10.0, 20.0, 40.0):
        pp = PotentialParams(a_strength=2.0 * b, alpha=1.0, b=b)
        lam = 2.0
        e_approx = numerov_solve(pp, lam, 0, NumerovConfig(centrifugal_mode="approximated")).energy
        e_exact = numerov_solve(pp, lam, 0, NumerovConfig(centrifugal_mode="exact")).energy
        deltas.append(abs(e_exact - e_approx))
    assert deltas[2] <= deltas[1] <= deltas[0]
    assert deltas[2] <= 1e-6


def test_infeasible_state_raises(pp_deep):
    with pytest.raises(ConstraintError):
        numerov_solve(pp_deep, 56.0, 0)  # energy would be non-negative


def test_approximation_error_table_values():
    pp = PotentialParams(a_strength=2.0, alpha=1.0, b=1.0)
    rows = approximation_error_table(pp, [1.0])
    r, exact, improved, conventional = rows[0]
    assert exact == 1.0
    # independent route: e^-x / (1-e^-x)^2 = 1 / (4 sinh^2(x/2))
    core = 1.0 / (4.0 * math.sinh(0.5) ** 2)
    assert improved == pytest.approx(1.0 / 12.0 + core, rel=1e-12)
    assert conventional == pytest.approx(core, rel=1e-12)
    assert improved == pytest.approx(1.004007, abs=5e-7)


def test_improved_beats_conventional_inside_well():
    pp = PotentialParams(a_strength=8.0, alpha=1.0, b=4.0)
    rows = approximation_error_table(pp, [0.4])
    _, exact, improved, conventional = rows[0]
    assert abs(improved - exact) / exact < abs(conventional - exact) / exact


def test_conventional_ratio_trend_near_origin():
    b = 2.0
    pp = PotentialParams(a_strength=2.0 * b, alpha=1.0, b=b)
    for r in (0.05, 0.02, 0.01):
        rows = approximation_error_table(pp, [r])
        _, exact, improved, conventional = rows[0]
        assert improved / exact == pytest.approx(1.0, abs=2.0 * r**2)
        # conventional scheme misses the constant: ratio ~ 1 - r^2/(12 b^2)
        assert conventional / exact == pytest.approx(
            1.0 - r**2 / (12.0 * b**2), abs=r**4
        )


def test_approximation_table_rejects_nonpositive_r():
    pp = PotentialParams(a_strength=2.0, alpha=1.0, b=1.0)
    with pytest.raises(ValueError):
        approximation_error_table(pp, [1.0, -0.5])


def test_custom_grid_bounds(pp_deep):
    cfg = NumerovConfig(r_min=1e-5 * pp_deep.b, r_max=20.0 * pp_deep.b, steps=20000)
    res = numerov_solve(pp_deep, 2.0, 0, cfg)
    sol = energy_level(pp_deep, 2.0, 0)
    assert abs(res.energy - sol.energy) <= 1e-5
