import math

import numpy as np
import pytest
from scipy.linalg import eigvalsh_tridiagonal

from su11pct import oracle, systems
from su11pct.errors import ParameterError


def test_grid_validation():
    with pytest.raises(ParameterError):
        oracle.GridSpec(1.0, 0.5, 500)
    with pytest.raises(ParameterError):
        oracle.GridSpec(0.0, 1.0, 50)


def test_constant_mass_stencil():
    spec = systems.OscillatorSpec(1.0, 0.0)
    grid = oracle.GridSpec(1e-4, 20.0, 200)
    dh = oracle.discretize(spec, 0, grid)
    h = grid.step
    q = np.linspace(grid.q_min, grid.q_max, grid.count)[1:-1]
    v = 0.25 * q * q
    assert np.max(np.abs(dh.diag - (2.0 / h**2 + v))) < 1e-9
    assert np.max(np.abs(dh.offdiag + 1.0 / h**2)) < 1e-9


def test_pdm_midpoint_masses():
    spec = systems.OscillatorSpec(1.0, 0.0, 0.3)
    grid = oracle.GridSpec(0.1, 5.0, 150)
    dh = oracle.discretize(spec, 0, grid)
    q = np.linspace(grid.q_min, grid.q_max, grid.count)
    mid = 0.5 * (q[:-1] + q[1:])
    f2 = (1.0 + 0.3 * mid**2) ** 2
    assert np.max(np.abs(dh.offdiag + f2[1:-1] / grid.step**2)) < 1e-9
    assert np.all(dh.offdiag <= 0)


def test_matrix_is_symmetric_by_construction():
    # one off-diagonal array serves both sides: a[i,i+1] - a[i+1,i] = 0 exactly
    spec = systems.MorseSpec(2.5, 1.0, 0.1)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(-5.0, 40.0, 500))
    assert dh.offdiag.shape[0] == dh.diag.shape[0] - 1


def test_constant_ho_levels():
    spec = systems.OscillatorSpec(1.0, 0.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(1e-4, 20.0, 4000))
    ev = oracle.lowest_eigenvalues(dh, 3, 1e-10)
    for e, ref in zip(ev, (1.5, 3.5, 5.5)):
        assert abs(e - ref) < 5e-4


def test_fixed_morse_levels():
    spec = systems.MorseSpec(2.5, 1.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(-6.0, 25.0, 4000))
    ev = oracle.lowest_eigenvalues(dh, 3, 1e-10)
    for e, ref in zip(ev, (-6.25, -2.25, -0.25)):
        assert abs(e - ref) < 5e-4


def test_deformed_ho_levels():
    spec = systems.OscillatorSpec(math.sqrt(3.0), 0.0, 1.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(1e-6, 250.0, 30000))
    ev = oracle.lowest_eigenvalues(dh, 2, 1e-9)
    assert abs(ev[0] - 5.5) < 2e-3
    assert abs(ev[1] - 19.5) < 2e-3


def test_agrees_with_lapack_bisection():
    spec = systems.MorseSpec(2.5, 1.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(-6.0, 25.0, 2000))
    mine = oracle.lowest_eigenvalues(dh, 5, 1e-11)
    ref = eigvalsh_tridiagonal(dh.diag, dh.offdiag, select="i", select_range=(0, 4))
    assert np.max(np.abs(np.asarray(mine) - ref)) < 1e-9


def test_eigenvalue_parameter_validation():
    spec = systems.OscillatorSpec(1.0, 0.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(1e-4, 20.0, 500))
    with pytest.raises(ParameterError):
        oracle.lowest_eigenvalues(dh, 0, 1e-10)
    with pytest.raises(ParameterError):
        oracle.lowest_eigenvalues(dh, 11, 1e-10)
    with pytest.raises(ParameterError):
        oracle.lowest_eigenvalues(dh, 2, 1e-13)


def test_richardson_consistency():
    # halving h shrinks the eigenvalue error by about 4 (second order)
    spec = systems.OscillatorSpec(1.0, 0.0)
    base = oracle.GridSpec(1e-4, 20.0, 1000)
    es = [
        oracle.lowest_eigenvalues(oracle.discretize(spec, 0, g), 1, 1e-11)[0]
        for g in (base, base.refined(2), base.refined(4))
    ]
    ratio = (es[0] - es[1]) / (es[1] - es[2])
    assert 3.5 <= ratio <= 4.5


def test_negative_count_matches_fixed_spectrum_rule():
    # constant-mass Morse A=2.5 holds exactly three bound levels
    spec = systems.MorseSpec(2.5, 1.0)
    dh = oracle.discretize(spec, 0, oracle.GridSpec(-6.0, 40.0, 3000))
    ev = oracle.lowest_eigenvalues(dh, 6, 1e-10)
    negatives = sum(1 for e in ev if e < 0)
    assert negatives == len(systems.spectrum_fixed_potential("morse", (2.5, 1.0), 0.0, 10))


def test_default_grids_resolve_levels():
    cases = [
        (systems.OscillatorSpec(1.0, 0.0), [1.5, 3.5], 4000, 5e-4),
        (systems.MorseSpec(2.5, 1.0), [-6.25, -2.25], 4000, 5e-4),
        (systems.CoulombSpec(0.0, 1.0), [-1.0, -0.25], 16000, 5e-4),
    ]
    for spec, refs, count, tol in cases:
        grid = oracle.default_grid(spec, 0, count=count, k=2)
        ev = oracle.lowest_eigenvalues(oracle.discretize(spec, 0, grid), 2, 1e-9)
        for e, ref in zip(ev, refs):
            assert abs(e - ref) < tol
