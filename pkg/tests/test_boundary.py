import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sqdirac import displays
from sqdirac.boundary import (
    BoundaryPhases,
    SlabGeometry,
    boundary_matrix_planewave,
    boundary_matrix_squared,
    build_covariant_G,
    check_G_implies_zero_current,
    current_jz,
    degree_consistency,
    direct_boundary_rows,
    g_special_cases,
    jz_of_spinor,
    normalized_det,
    quantize_dirac,
    row_scaling_mismatch,
    spectra_agree,
    weyl_current,
    weyl_K2,
    weyl_quantize,
)
from sqdirac.clifford import REPRESENTATIONS, build_gammas
from sqdirac.solutions import make_mode, phi_basis, squared_set, weyl_waves

angle = st.floats(-math.pi, math.pi, allow_nan=False)
comp = st.floats(-2, 2, allow_nan=False)
PH = BoundaryPhases(0.3, 1.1, -0.7, 2.0)
GENERIC_KS = [0.7102398878130289, 1.7561483516852894, 1.9785134611939004,
              3.351822045834316, 3.4752621043373377, 4.929626431459777]


def test_phases_rejects_nan():
    with pytest.raises(ValueError):
        BoundaryPhases(0.0, float("nan"), 0.0, 0.0)


def test_geometry_positive():
    with pytest.raises(ValueError):
        SlabGeometry(0.0)


def test_current_formula_matches_bilinear(rng):
    g = build_gammas("spinor")
    for _ in range(10):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        j = jz_of_spinor(psi, g)
        assert abs(j.imag) <= 1e-13
        assert abs(j.real - displays.spinor_current_formula(psi)) <= 1e-13


def test_current_of_combination(ref_mode):
    phi = phi_basis(ref_mode)
    g = build_gammas("spinor")
    val = current_jz(phi.columns[:2], (1.0, 0.5j), g, (0.0, 0.0, 0.0, 0.2))
    psi = phi.columns[0].evaluate((0, 0, 0, 0.2)) + 0.5j * phi.columns[1].evaluate((0, 0, 0, 0.2))
    assert val == pytest.approx(jz_of_spinor(psi, g).real, abs=1e-14)


def test_weyl_current_factor_of_two():
    eta, _ = weyl_waves(0.3, 0.4, 1.2)
    wc = weyl_current(eta.components)
    middle, final = displays.weyl_current_claim(0.3, 0.4, 1.2)
    assert wc["jz"] == pytest.approx(24.0, abs=1e-12)
    assert wc["jz"] == pytest.approx(middle, abs=1e-12)
    assert final == pytest.approx(12.0, abs=1e-12)
    assert wc["normalized"] == pytest.approx(1.2 / 1.3, abs=1e-13)


@pytest.mark.parametrize("builder,key", [(boundary_matrix_planewave, "pw"), (boundary_matrix_squared, "sq")])
def test_builders_are_row_scalings_of_direct_conditions(builder, key):
    m = make_mode(0.3, 0.4, 0.9, 1.0)
    a = 0.8
    if key == "pw":
        phi = phi_basis(m)
        cols = [phi.columns[i] for i in (0, 2, 1, 3)]
    else:
        cols = squared_set(m).columns
    ref = direct_boundary_rows(cols, PH, a)
    mis = row_scaling_mismatch(builder(m, PH, cmath.exp(2j * m.k * a)), ref)
    assert max(mis) <= 1e-12


def test_printed_planewave_matrix_swaps_rows_three_and_four():
    m = make_mode(0.3, 0.4, 0.9, 1.0)
    K = cmath.exp(1.44j)
    phi = phi_basis(m)
    ref = direct_boundary_rows([phi.columns[i] for i in (0, 2, 1, 3)], PH, 0.8)
    mis = row_scaling_mismatch(displays.planewave_matrix(m, PH, K), ref)
    assert max(mis[:2]) < 1e-12 and min(mis[2:]) > 0.1
    assert np.max(np.abs(displays.planewave_system(m, PH, K) - boundary_matrix_planewave(m, PH, K))) == 0


def test_printed_squared_system_wrong_in_rows_three_and_four():
    m = make_mode(0.3, 0.4, 0.9, 1.0)
    ref = direct_boundary_rows(squared_set(m).columns, PH, 0.8)
    mis = row_scaling_mismatch(displays.squared_system(m, PH, cmath.exp(1.44j)), ref)
    assert max(mis[:2]) < 1e-12 and min(mis[2:]) > 0.1


@given(comp, comp, st.floats(0.05, 3), st.floats(0.05, 2), angle, angle, angle, angle)
def test_determinant_is_quartic(k1, k2, k, M, r, s, u, v):
    assume(k1 * k1 + k2 * k2 > 1e-4)
    m = make_mode(k1, k2, k, M)
    ph = BoundaryPhases(r, s, u, v)
    assert degree_consistency(m, ph, "planewave") <= 1e-10
    assert degree_consistency(m, ph, "squared") <= 1e-10


def test_equal_phase_ladder():
    for which in ("planewave", "squared"):
        s = quantize_dirac(0.3, 0.4, 1.0, SlabGeometry(1.0), BoundaryPhases.equal(0.0), 5.0, which)
        assert np.allclose(s.ks, [math.pi / 2, math.pi, 3 * math.pi / 2], atol=1e-12)
        assert all(r.multiplicity == 2 for r in s)


def test_generic_spectrum_frozen():
    s1 = quantize_dirac(0.3, 0.4, 1.0, SlabGeometry(1.0), PH, 5.0, "planewave")
    s2 = quantize_dirac(0.3, 0.4, 1.0, SlabGeometry(1.0), PH, 5.0, "squared")
    assert np.allclose(s1.ks, GENERIC_KS, atol=1e-10)
    assert spectra_agree(s1, s2)[0]
    for r in s1:
        m = make_mode(0.3, 0.4, r.k, 1.0)
        phi = phi_basis(m)
        oracle = direct_boundary_rows([phi.columns[i] for i in (0, 2, 1, 3)], PH, 1.0)
        assert normalized_det(oracle) <= 1e-8
        assert abs(cmath.exp(2j * r.k) - r.K) <= 1e-8


def test_empty_spectrum_is_flagged():
    s = quantize_dirac(0.3, 0.4, 1.0, SlabGeometry(1.0), PH, 0.1)
    assert len(s) == 0 and "empty spectrum" in s.flags


def test_quantize_rejects_axis_and_massless():
    with pytest.raises(ValueError):
        quantize_dirac(0.0, 0.0, 1.0, SlabGeometry(1.0), PH, 5.0)
    with pytest.raises(ValueError):
        quantize_dirac(0.3, 0.4, 0.0, SlabGeometry(1.0), PH, 5.0)


@given(comp, comp, st.floats(0.01, 5), angle, angle)
def test_weyl_ratio_unit_modulus(k1, k2, k, r, s):
    assume(k1 * k1 + k2 * k2 > 1e-4)
    assert abs(abs(weyl_K2(k1, k2, k, r, s)) - 1) <= 1e-12


def test_weyl_equal_phase_ladder():
    s = weyl_quantize(0.3, 0.4, SlabGeometry(1.0), 0.5, 0.5, 5.0)
    assert np.allclose(s.ks, [math.pi / 2, math.pi, 3 * math.pi / 2], atol=1e-8)


def test_weyl_generic_frozen():
    s = weyl_quantize(0.3, 0.4, SlabGeometry(1.0), 0.5, 1.7, 5.0)
    assert np.allclose(s.ks, [1.802536060235278, 3.403183657957216, 4.985629038825206], atol=1e-10)
    assert all(r.det_residual <= 1e-8 for r in s)


@given(angle, angle)
def test_covariant_g_routes_agree(rho, sigma):
    for rep in REPRESENTATIONS:
        G = build_covariant_G(rho, sigma, build_gammas(rep))
        assert max(G.form_deviation.values()) <= 1e-12
        assert np.max(np.abs(G.matrix @ G.matrix - np.eye(4))) <= 1e-12


def test_covariant_g_matches_printed_matrix():
    G = build_covariant_G(0.4, -1.3)
    assert np.max(np.abs(G.matrix - displays.covariant_g_explicit(0.4, -1.3))) <= 1e-15


@given(angle)
def test_covariant_g_special_cases(rho):
    assert max(g_special_cases(rho).values()) <= 1e-12


@given(angle, angle, st.lists(comp, min_size=4, max_size=4))
def test_fixed_point_implies_zero_current(rho, sigma, c):
    g = build_gammas("spinor")
    a1, a2 = complex(c[0], c[1]), complex(c[2], c[3])
    psi = np.array([a1, a2, cmath.exp(1j * rho) * a1, cmath.exp(1j * sigma) * a2])
    rep = check_G_implies_zero_current(build_covariant_G(rho, sigma, g), psi, g)
    assert rep["is_fixed_point"] and rep["implication_holds"]


def test_zero_spinor_trivially_fixed():
    g = build_gammas("spinor")
    rep = check_G_implies_zero_current(build_covariant_G(0.2, 0.3, g), np.zeros(4), g)
    assert rep["is_fixed_point"] and rep["current_vanishes"]


def test_random_spinor_probe_recorded(rng):
    g = build_gammas("spinor")
    rep = check_G_implies_zero_current(build_covariant_G(0.2, 0.3, g),
                                       rng.normal(size=4) + 1j * rng.normal(size=4), g)
    assert rep["implication_holds"] is None
    assert math.isfinite(rep["jz"])
