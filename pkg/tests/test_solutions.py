import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sqdirac import displays
from sqdirac.clifford import build_gammas
from sqdirac.solutions import (
    StructuredSolution,
    combine_sets,
    dirac_residual,
    fd_dirac_operator,
    fd_weyl_operator,
    helicity_data,
    helicity_eigenvalue,
    helicity_wave,
    make_mode,
    phi_basis,
    primed_set,
    set_det,
    set_rank,
    squared_set,
    u_sets,
    w_sets,
    weyl_waves,
)

comp = st.floats(-2, 2, allow_nan=False)
mass = st.floats(0.05, 2, allow_nan=False)
POINTS = ((0.0, 0.0, 0.0, 0.37), (0.4, -0.3, 0.8, -1.1), (-1.2, 0.5, 0.1, 2.0))


def test_mode_kinematics(ref_mode):
    assert ref_mode.p == pytest.approx(1.3, abs=1e-15)
    assert ref_mode.epsilon == pytest.approx(math.sqrt(2.69), abs=1e-15)
    assert ref_mode.f == 0.3 + 0.4j
    assert ref_mode.g == 0.3 - 0.4j


def test_helicity_data_frozen(ref_mode):
    h = helicity_data(ref_mode)
    assert h.alpha == pytest.approx(0.34012194668567264, abs=1e-15)
    assert h.beta == pytest.approx(2.9401219466856725, abs=1e-15)
    assert abs(h.s - (0.12 + 0.16j)) < 1e-15
    assert abs(h.t - (-3 - 4j)) < 1e-13


def test_helicity_ratio_undefined_on_axis():
    h = helicity_data(make_mode(0.0, 0.0, 1.0, 1.0))
    assert h.s == 0
    assert h.t is None


def test_helicity_eigenvalues(ref_mode):
    phi = phi_basis(ref_mode)
    lams = [helicity_eigenvalue(c)[0] for c in phi.columns]
    p = ref_mode.p
    assert np.allclose(lams, [p, p, -p, -p], atol=1e-13)


@pytest.mark.parametrize("rep", ["spinor", "standard", "majorana"])
def test_squared_set_residual_rank_det(ref_mode, rep):
    s = squared_set(ref_mode, rep, 0.0)
    g = build_gammas(rep)
    assert max(dirac_residual(c, g) for c in s.columns) <= 1e-10
    assert set_rank(s) == 4
    assert set_det(s) == pytest.approx(2.0736, abs=1e-12)


def test_squared_set_matches_printed_forms(ref_mode):
    for z in (-0.7, 0.2, 1.3):
        pt = (0.0, 0.0, 0.0, z)
        assert np.max(np.abs(squared_set(ref_mode).evaluate(pt) - displays.squared_sin_seed(ref_mode, z))) < 1e-14
        assert np.max(np.abs(primed_set(ref_mode).evaluate(pt) - displays.squared_primed_seed(ref_mode, z))) < 1e-14


def test_plane_wave_sets(ref_mode):
    U, Up = u_sets(ref_mode)
    assert np.max(np.abs(U.first_matrix() - displays.plane_wave_set(ref_mode))) == 0
    assert np.max(np.abs(Up.second_matrix() - displays.plane_wave_set_reflected(ref_mode))) == 0
    assert set_rank(U) == set_rank(Up) == 2


def test_plane_waves_are_combinations_of_squared_sets(ref_mode):
    U, _ = u_sets(ref_mode)
    combo = combine_sets(squared_set(ref_mode), primed_set(ref_mode), (1j, -1))
    for a, b in zip(combo.columns, U.columns):
        assert np.allclose(a.evaluate(POINTS[1]), b.evaluate(POINTS[1]), atol=1e-13)


def test_standard_sets(ref_mode):
    W, Wp = w_sets(ref_mode)
    for z in (0.1, 0.9):
        pt = (0.0, 0.0, 0.0, z)
        assert np.max(np.abs(W.evaluate(pt) - displays.standard_sin_seed(ref_mode, z))) < 1e-14
        assert np.max(np.abs(Wp.evaluate(pt) - displays.standard_primed_seed(ref_mode, z))) < 1e-14


def test_k_zero_squared_set_is_singular():
    s = squared_set(make_mode(0.3, 0.4, 0.0, 1.0))
    assert set_rank(s) < 4


def test_real_phase_round_trip(ref_mode):
    wave = helicity_wave(ref_mode, "alpha", 1)
    rp = wave.as_real_phase()
    for pt in POINTS:
        assert np.allclose(rp.evaluate(pt), wave.evaluate(pt), atol=1e-14)


def test_mismatched_addition_rejected(ref_mode):
    a = helicity_wave(ref_mode, "alpha", 1)
    b = helicity_wave(make_mode(0.1, 0.4, 1.2, 1.0), "alpha", 1)
    with pytest.raises(ValueError):
        a + b


def test_weyl_waves_frozen():
    eta, etap = weyl_waves(0.3, 0.4, 1.2)
    assert np.allclose(eta.components, [1, -3 - 4j], atol=1e-13)
    assert eta.residual() <= 1e-13 and etap.residual() <= 1e-13
    lam, res = eta.helicity()
    assert res < 1e-13 and lam.real < 0


def test_weyl_on_axis_rejected():
    with pytest.raises(ValueError):
        weyl_waves(0.0, 0.0, 1.0)


@given(comp, comp, comp, mass, st.floats(-3, 3))
def test_structured_residuals_vanish(k1, k2, k, M, gamma):
    m = make_mode(k1, k2, k, M)
    cols = list(squared_set(m, "spinor", gamma).columns)
    cols += list(squared_set(m, "majorana", gamma).columns)
    if k1 * k1 + k2 * k2 > 1e-8:
        cols += list(phi_basis(m).columns)
    for c in cols:
        assert dirac_residual(c) <= 1e-10 * max(1.0, c.max_coeff())


@given(comp, comp, comp, mass)
def test_finite_differences_agree(k1, k2, k, M):
    m = make_mode(k1, k2, k, M)
    g = build_gammas("spinor")
    for c in squared_set(m, "spinor", 0.3).columns:
        for pt in POINTS[:2]:
            assert np.max(np.abs(fd_dirac_operator(c, g, pt))) <= 1e-6 * max(1.0, c.max_coeff()) * 10


@given(comp, comp, comp)
def test_weyl_finite_differences(k1, k2, k):
    assume(k1 * k1 + k2 * k2 > 1e-4)
    for w in weyl_waves(k1, k2, k):
        assert np.max(np.abs(fd_weyl_operator(w, POINTS[1]))) <= 1e-6 * 10


def test_structured_solution_rejects_bad_form(ref_mode):
    with pytest.raises(ValueError):
        StructuredSolution(ref_mode, "spinor", "elliptic", np.zeros(4), np.zeros(4))
