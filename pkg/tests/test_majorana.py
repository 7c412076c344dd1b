import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqdirac.algebra import det4, numerical_rank
from sqdirac.clifford import build_gammas
from sqdirac.majorana import (
    from_majorana,
    linear_map_nonexistence,
    majorana_report,
    real_imag_split,
    squared_majorana_sets,
    to_majorana,
)
from sqdirac.solutions import dirac_residual, helicity_wave, make_mode

comp = st.floats(-2, 2, allow_nan=False)
mass = st.floats(0.05, 2, allow_nan=False)
PTS = ((0.0, 0.1, 0.2, 0.3), (0.7, -0.4, 0.5, 1.1))


def test_families_real_and_imaginary(ref_mode):
    R, I = squared_majorana_sets(ref_mode)
    assert R.parity_defect() == 0 and I.parity_defect() == 0
    for pt in PTS:
        assert np.max(np.abs(R.evaluate(pt).imag)) == 0
        assert np.max(np.abs(I.evaluate(pt).real)) == 0


@given(comp, comp, comp, mass)
def test_family_determinant_is_mass_to_fourth(k1, k2, k, M):
    m = make_mode(k1, k2, k, M)
    R, I = squared_majorana_sets(m)
    g = build_gammas("majorana")
    for fam in (R, I):
        assert max(dirac_residual(c, g) for c in fam.columns) <= 1e-10 * max(1.0, m.epsilon)
        for pt in PTS:
            assert abs(det4(fam.evaluate(pt)) - M ** 4) <= 1e-9 * max(1.0, m.epsilon) ** 4


def test_rank_four(ref_mode):
    R, I = squared_majorana_sets(ref_mode)
    assert numerical_rank(R.evaluate(PTS[0])) == numerical_rank(I.evaluate(PTS[0])) == 4


def test_majorana_round_trip(ref_mode):
    w = helicity_wave(ref_mode, "beta", -1)
    back = from_majorana(to_majorana(w))
    assert np.allclose(back.first, w.first) and np.allclose(back.second, w.second)


def test_split_of_real_solution(ref_mode):
    R, _ = squared_majorana_sets(ref_mode)
    col = R.columns[1]
    re, im = real_imag_split(col, col.conjugate())
    assert np.max(np.abs(im.first)) == 0 and np.max(np.abs(re.first - col.first)) == 0


def test_split_rejects_non_conjugate(ref_mode):
    w = to_majorana(helicity_wave(ref_mode, "alpha", 1)).as_real_phase()
    with pytest.raises(ValueError):
        real_imag_split(w, w)


def test_transfer_matrix_is_constant(ref_mode):
    R, I = squared_majorana_sets(ref_mode)
    out = linear_map_nonexistence(R, I, PTS)
    assert out["x1"]["sin_2phase"] != pytest.approx(out["x2"]["sin_2phase"])
    assert out["deviation"] <= 1e-12
    P = build_gammas("majorana").slash(ref_mode.epsilon, ref_mode.k1, ref_mode.k2, ref_mode.k)
    assert np.max(np.abs(out["x1"]["S"] - P / ref_mode.M)) <= 1e-12


def test_report_display_findings(ref_mode):
    pd = majorana_report(ref_mode)["printed_display"]
    assert pd["real_set"] <= 1e-12 and pd["imaginary_set"] <= 1e-12
    assert pd["helicity_wave_vs_A_inverse_image"] <= 1e-12
    assert pd["helicity_wave_vs_A_image"] > 1


def test_massless_rejected():
    with pytest.raises(ValueError):
        squared_majorana_sets(make_mode(0.3, 0.4, 1.0, 0.0))
