"""Golden-display comparison suite.

Every printed closed form in ``displays`` is compared with the object
derived independently by the library. Each entry records the deviation
and whether it is within tolerance; deviations are findings, not errors.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import constants as C
from . import displays
from .basis_maps import display_comparison
from .boundary import (
    BoundaryPhases,
    boundary_matrix_planewave,
    boundary_matrix_squared,
    build_covariant_G,
    direct_boundary_rows,
    g_special_cases,
    jz_of_spinor,
    row_scaling_mismatch,
    weyl_current,
)
from .clifford import (
    build_gammas,
    gamma5_product_relation,
    majorana_display_deviation,
    majorana_transform,
    transform_gammas,
)
from .majorana import majorana_report
from .solutions import (
    helicity_data,
    make_mode,
    phi_basis,
    primed_set,
    set_det,
    squared_set,
    u_sets,
    w_sets,
    weyl_waves,
)

__all__ = ["DEFAULT_MODE", "paper_check"]

DEFAULT_MODE = (0.3, 0.4, 1.2, 1.0)
DEFAULT_PHASES = (0.3, 1.1, -0.7, 2.0)
DEFAULT_A = 0.8
_ZS = (-0.7, 0.2, 1.3)


def _entry(deviation: float, tol: float, **extra) -> dict:
    out = {"deviation": float(deviation), "tolerance": tol, "matches": bool(deviation <= tol)}
    out.update(extra)
    return out


def _max_dev(x, y) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def _set_vs_display(s, display, zs=_ZS) -> float:
    return max(_max_dev(s.evaluate((0.0, 0.0, 0.0, z)), display(s.mode, z)) for z in zs)


def _mismatched_rows(mis, tol) -> list:
    return [i + 1 for i, r in enumerate(mis) if r > tol]


def _solutions_section(m) -> dict:
    U, Up = u_sets(m)
    W, Wp = w_sets(m)
    dets = [set_det(squared_set(m, "spinor", g), (0.0, 0.0, 0.0, z))
            for g in (0.0, 0.9, -2.1) for z in _ZS]
    oracle = dets[0]
    claim = displays.squared_det_claim(m)
    h = helicity_data(make_mode(0.0, 0.0, 1.0, 1.0))
    return {
        "squared_sin_set": _entry(_set_vs_display(squared_set(m, "spinor", 0.0), displays.squared_sin_seed),
                                  C.DISPLAY_TOL * 100),
        "squared_primed_set": _entry(_set_vs_display(primed_set(m, "spinor"), displays.squared_primed_seed),
                                     C.DISPLAY_TOL * 100),
        "plane_wave_set": _entry(_max_dev(U.first_matrix(), displays.plane_wave_set(m)), C.DISPLAY_TOL * 100),
        "plane_wave_reflected_set": _entry(_max_dev(Up.second_matrix(), displays.plane_wave_set_reflected(m)),
                                           C.DISPLAY_TOL * 100),
        "standard_sin_set": _entry(_set_vs_display(W, displays.standard_sin_seed), C.DISPLAY_TOL * 100),
        "standard_primed_set": _entry(_set_vs_display(Wp, displays.standard_primed_seed), C.DISPLAY_TOL * 100),
        "squared_determinant": _entry(abs(oracle - claim) / abs(claim), 1e-9, oracle=oracle, claim=claim,
                                      ratio=oracle / claim,
                                      spread=max(abs(d - oracle) for d in dets)),
        "helicity_ratio_on_axis": {
            "mode": [0.0, 0.0, 1.0, 1.0],
            "s": h.s,
            "t": h.t,
            "note": "t is 0/0 when k1 = k2 = 0 and k = p; reported as undefined",
        },
    }


def _boundary_section(m, ph, a) -> dict:
    K = cmath.exp(2j * m.k * a)
    phi = phi_basis(m)
    ref_pw = direct_boundary_rows([phi.columns[i] for i in (0, 2, 1, 3)], ph, a)
    ref_sq = direct_boundary_rows(squared_set(m, "spinor", 0.0).columns, ph, a)
    tol = 1e-10
    out = {}
    for name, B, ref in (
        ("planewave_builder", boundary_matrix_planewave(m, ph, K), ref_pw),
        ("planewave_printed_system", displays.planewave_system(m, ph, K), ref_pw),
        ("planewave_printed_matrix", displays.planewave_matrix(m, ph, K), ref_pw),
        ("squared_builder", boundary_matrix_squared(m, ph, K), ref_sq),
        ("squared_printed_system", displays.squared_system(m, ph, K), ref_sq),
        ("squared_printed_matrix", displays.squared_matrix(m, ph, K), ref_sq),
    ):
        mis = row_scaling_mismatch(B, ref)
        out[name] = _entry(max(mis), tol, row_mismatch=mis, mismatched_rows=_mismatched_rows(mis, tol))
    out["planewave_matrix_vs_system"] = _entry(
        _max_dev(displays.planewave_matrix(m, ph, K), displays.planewave_system(m, ph, K)), tol,
        note="rows 3-4 of the printed matrix exchange (k+p) and (k-p)")
    sys_sq = displays.squared_system(m, ph, K)
    built = boundary_matrix_squared(m, ph, K)
    out["squared_system_vs_builder"] = _entry(
        min(_max_dev(sys_sq, built), _max_dev(sys_sq, -built)), tol,
        note="rows 3-4 of the printed system exchange m = e+k and n = e-k in the fourth column")
    return out


def _current_section(m, rho, sigma) -> dict:
    g = build_gammas("spinor")
    rng = np.random.default_rng(7)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    direct = jz_of_spinor(psi, g)
    formula = displays.spinor_current_formula(psi)
    eta, _ = weyl_waves(m.k1, m.k2, m.k)
    wc = weyl_current(eta.components)
    middle, final = displays.weyl_current_claim(m.k1, m.k2, m.k)
    e = math.sqrt(m.k1 ** 2 + m.k2 ** 2 + m.k ** 2)
    G = build_covariant_G(rho, sigma, g)
    explicit = displays.covariant_g_explicit(rho, sigma)
    return {
        "spinor_current_formula": _entry(abs(direct - formula), 1e-12),
        "weyl_current_middle_expression": _entry(abs(wc["jz"] - middle), 1e-12, raw=wc["jz"]),
        "weyl_current_final_value": _entry(abs(wc["jz"] - final), 1e-12, raw=wc["jz"], claim=final,
                                           ratio=wc["jz"] / final if final else float("nan"),
                                           normalized=wc["normalized"], k_over_e=m.k / e),
        "covariant_g_explicit": _entry(_max_dev(G.matrix, explicit), 1e-12),
        "covariant_g_forms": _entry(max(G.form_deviation.values()), 1e-12),
        "covariant_g_equal_phases": _entry(g_special_cases(rho, g)["equal_phases"], 1e-12),
        "covariant_g_opposite_phases": _entry(g_special_cases(rho, g)["opposite_phases"], 1e-12),
    }


def _majorana_section(m) -> dict:
    rep = majorana_report(m)
    pd = rep["printed_display"]
    tol = 1e-10
    s2 = rep["S_two_point"]
    return {
        "gamma_matrices": _entry(majorana_display_deviation(transform_gammas(
            majorana_transform(), build_gammas("spinor"), "majorana")), C.DISPLAY_TOL),
        "real_set": _entry(pd["real_set"], tol),
        "imaginary_set": _entry(pd["imaginary_set"], tol),
        "determinant_real": _entry(abs(rep["determinants"]["real"][0] - m.M ** 4) / m.M ** 4, 1e-9,
                                   oracle=rep["determinants"]["real"][0], claim=m.M ** 4),
        "determinant_imaginary": _entry(abs(rep["determinants"]["imaginary"][0] - m.M ** 4) / m.M ** 4, 1e-9,
                                        oracle=rep["determinants"]["imaginary"][0], claim=m.M ** 4),
        "helicity_wave_as_A_image": _entry(pd["helicity_wave_vs_A_image"], tol),
        "helicity_wave_as_A_inverse_image": _entry(pd["helicity_wave_vs_A_inverse_image"], tol),
        "alpha_real_part_cos": _entry(pd["alpha_real_part_cos"], tol),
        "alpha_real_part_sin": _entry(pd["alpha_real_part_sin"], tol),
        "alpha_imag_part_cos": _entry(pd["alpha_imag_part_cos"], tol),
        "alpha_imag_part_sin": _entry(pd["alpha_imag_part_sin"], tol),
        "transfer_matrix_point_1": _entry(s2["x1"]["display_deviation"], tol),
        "transfer_matrix_point_2": _entry(s2["x2"]["display_deviation"], tol),
        "transfer_matrix_two_point_spread": {
            "deviation": s2["deviation"],
            "sin_2phase": [s2["x1"]["sin_2phase"], s2["x2"]["sin_2phase"]],
            "note": "I R^{-1} is the constant matrix (Majorana slash of p)/M",
        },
    }


def paper_check(mode=DEFAULT_MODE, phases=DEFAULT_PHASES, a: float = DEFAULT_A) -> dict:
    """Run every display comparison at one mode and return the report.

    ``summary`` lists the keys whose displays do not match.
    """
    m = make_mode(*mode)
    ph = BoundaryPhases(*phases)
    sections = {
        "clifford": {
            "gamma5_vs_i_g0g1g2g3": gamma5_product_relation(build_gammas("spinor")),
        },
        "solutions": _solutions_section(m),
        "basis_maps": {k: _entry(v, 1e-10) for k, v in display_comparison(m)["deviation"].items()},
        "basis_map_ratios": display_comparison(m)["ratio"],
        "majorana": _majorana_section(m),
        "boundary": _boundary_section(m, ph, a),
        "currents": _current_section(m, ph.rho, ph.sigma),
    }
    mismatches = []
    for sec, entries in sections.items():
        for key, val in entries.items():
            if isinstance(val, dict) and val.get("matches") is False:
                mismatches.append(f"{sec}.{key}")
    return {
        "mode": m.as_dict(),
        "phases": {"rho": ph.rho, "sigma": ph.sigma, "mu": ph.mu, "nu": ph.nu},
        "a": a,
        "sections": sections,
        "summary": {"mismatches": mismatches, "count": len(mismatches)},
    }
