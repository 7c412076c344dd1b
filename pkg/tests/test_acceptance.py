"""Acceptance criteria 1-10, one test each.

Each test prints a single ``CRITERION n: PASS|FAIL`` line and then
asserts. The lines are also repeated in the terminal summary.
"""

import cmath
import math
import subprocess
import sys

import numpy as np
import pytest

from sqdirac import displays
from sqdirac.algebra import det4, numerical_rank
from sqdirac.basis_maps import build_basis_matrices, expand_u_in_phi, reconstruction_residuals
from sqdirac.boundary import (
    BoundaryPhases,
    SlabGeometry,
    build_covariant_G,
    check_G_implies_zero_current,
    degree_consistency,
    g_special_cases,
    quantize_dirac,
    spectra_agree,
    weyl_K2,
    weyl_quantize,
)
from sqdirac.cli import run
from sqdirac.clifford import (
    REPRESENTATIONS,
    build_gammas,
    covariance_check,
    majorana_display_deviation,
    majorana_transform,
    standard_transform,
    transform_gammas,
)
from sqdirac.majorana import linear_map_nonexistence, squared_majorana_sets
from sqdirac.solutions import (
    dirac_residual,
    fd_dirac_operator,
    fd_weyl_operator,
    make_mode,
    phi_basis,
    set_det,
    set_rank,
    squared_set,
    u_sets,
    w_sets,
    weyl_waves,
)

RESULTS = {}


def record(n: int, ok: bool, detail: str):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def random_modes(seed: int, count: int):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        k1, k2, k = rng.uniform(-2, 2, 3)
        M = rng.uniform(0, 2)
        if M == 0:
            continue
        out.append(make_mode(k1, k2, k, M))
    return out


def random_points(rng, count):
    return [tuple(rng.uniform(-2, 2, 4)) for _ in range(count)]


def test_criterion_1_clifford():
    worst = max(max(build_gammas(r).deviation().values()) for r in REPRESENTATIONS)
    built = transform_gammas(majorana_transform(), build_gammas("spinor"), "majorana")
    disp = majorana_display_deviation(built)
    record(1, worst <= 1e-12 and disp <= 1e-14,
           f"max Clifford deviation {worst:.2e}, Majorana display deviation {disp:.2e}")


def test_criterion_2_solution_validity():
    rng = np.random.default_rng(2)
    worst_res, worst_fd = 0.0, 0.0
    for m in random_modes(102, 100):
        pts = random_points(rng, 3)
        checked = []
        checked += [(c, "spinor") for c in phi_basis(m).columns]
        for gam in rng.uniform(-math.pi, math.pi, 5):
            checked += [(c, "spinor") for c in squared_set(m, "spinor", gam).columns]
        for s in u_sets(m):
            checked += [(c, "spinor") for c in s.columns]
        for s in w_sets(m):
            checked += [(c, "standard") for c in s.columns]
        for fam in squared_majorana_sets(m):
            checked += [(c, "majorana") for c in fam.columns]
        for sol, rep in checked:
            g = build_gammas(rep)
            worst_res = max(worst_res, dirac_residual(sol, g))
            for pt in pts:
                worst_fd = max(worst_fd, float(np.max(np.abs(fd_dirac_operator(sol, g, pt, 1e-5)))))
        for w in weyl_waves(m.k1, m.k2, m.k):
            worst_res = max(worst_res, w.residual())
            for pt in pts:
                worst_fd = max(worst_fd, float(np.max(np.abs(fd_weyl_operator(w, pt, 1e-5)))))
    record(2, worst_res <= 1e-10 and worst_fd <= 1e-6,
           f"max structured residual {worst_res:.2e}, max finite-difference residual {worst_fd:.2e}")


def test_criterion_3_rank_and_determinants():
    rng = np.random.default_rng(3)
    ok = True
    notes = []
    for m in random_modes(103, 20):
        if set_rank(squared_set(m)) != 4:
            ok = False
        U, Up = u_sets(m)
        if set_rank(U) != 2 or set_rank(Up) != 2:
            ok = False
        mats = build_basis_matrices(m)
        if numerical_rank(mats["S"].entries) != 2 or numerical_rank(mats["S_primed"].entries) != 2:
            ok = False
    m = make_mode(0.3, 0.4, 1.2, 1.0)
    pts = random_points(rng, 20)
    R, I = squared_majorana_sets(m)
    dR = [det4(R.evaluate(p)) for p in pts]
    dI = [det4(I.evaluate(p)) for p in pts]
    spread = max(abs(d - dR[0]) for d in dR + dI)
    maj_rel = abs(dR[0] - m.M ** 4) / m.M ** 4
    ok = ok and spread <= 1e-9 and maj_rel <= 1e-9
    dets = [set_det(squared_set(m, "spinor", gam), (0.0, 0.0, 0.0, z))
            for gam in (0.0, 1.1, -2.3) for z in (-1.0, 0.3, 0.9)]
    sq_spread = max(abs(d - dets[0]) for d in dets)
    ratio = dets[0] / displays.squared_det_claim(m)
    ok = ok and sq_spread <= 1e-10
    notes.append(f"Majorana det spread {spread:.2e}, rel. to M^4 {maj_rel:.2e}")
    notes.append(f"squared det spread {sq_spread:.2e}, ratio to k^4 {ratio.real:.12f}")
    record(3, ok, "; ".join(notes))


def test_criterion_4_round_trip():
    worst_rt, worst_coef = 0.0, 0.0
    for m in random_modes(104, 100):
        res = reconstruction_residuals(m)
        worst_rt = max(worst_rt, max(res.values()))
        phi = phi_basis(m)
        U, Up = u_sets(m)
        e, ep = expand_u_in_phi(U, phi), expand_u_in_phi(Up, phi)
        closed = displays.expansion_coeffs(m)
        solved = {"a": e.a, "b": e.b, "c": e.c, "d": e.d,
                  "a_primed": ep.a, "b_primed": ep.b, "c_primed": ep.c, "d_primed": ep.d}
        for key, val in closed.items():
            worst_coef = max(worst_coef, abs(solved[key] - val) / max(1.0, abs(val)))
    record(4, worst_rt <= 1e-10 and worst_coef <= 1e-12,
           f"max reconstruction/composite residual {worst_rt:.2e}, max coefficient deviation {worst_coef:.2e}")


def test_criterion_5_majorana_transfer():
    m = make_mode(0.3, 0.4, 1.2, 1.0)
    R, I = squared_majorana_sets(m)
    differ = linear_map_nonexistence(R, I, ((0.0, 0.1, 0.2, 0.3), (0.7, -0.4, 0.5, 1.1)))
    th1 = m.epsilon * 0.0 - m.k1 * 0.1 - m.k2 * 0.2 - m.k * 0.3
    # a second point whose phase has the same sin 2th
    shift = math.pi / m.epsilon
    same = linear_map_nonexistence(R, I, ((0.0, 0.1, 0.2, 0.3), (shift, 0.1, 0.2, 0.3)))
    s11 = differ["x1"]["S"][0, 0]
    F = (m.M ** 2 + m.k1 ** 2) / 2
    shown11 = 1j / m.M ** 2 * (m.M * m.k1 - F * math.sin(2 * th1))
    d11 = abs(s11 - shown11)
    ok = differ["deviation"] > 1e-6 and same["deviation"] <= 1e-10 and d11 <= 1e-10
    record(5, ok, f"spread at differing sin 2th {differ['deviation']:.2e}, at equal sin 2th "
                  f"{same['deviation']:.2e}, S(1,1) display deviation {d11:.2e}")


def test_criterion_6_weyl():
    rng = np.random.default_rng(6)
    worst_mod = 0.0
    for _ in range(100):
        k1, k2, k = rng.uniform(-2, 2, 3)
        r, s = rng.uniform(-math.pi, math.pi, 2)
        worst_mod = max(worst_mod, abs(abs(weyl_K2(k1, k2, k, r, s)) - 1))
    spec = weyl_quantize(0.3, 0.4, SlabGeometry(1.0), 0.5, 0.5, 5.0)
    target = [math.pi / 2, math.pi, 3 * math.pi / 2]
    ladder = len(spec) == 3 and max(abs(a - b) for a, b in zip(spec.ks, target)) <= 1e-8
    worst_inv = 0.0
    for r, s in ((0.5, 0.5), (0.5, 1.7), (-1.0, 2.5)):
        for root in weyl_quantize(0.3, 0.4, SlabGeometry(1.0), r, s, 5.0):
            worst_inv = max(worst_inv, root.det_residual, root.unit_modulus_dev)
    record(6, worst_mod <= 1e-12 and ladder and worst_inv <= 1e-8,
           f"max ||K^2|-1| {worst_mod:.2e}, ladder {spec.ks}, max root residual {worst_inv:.2e}")


def test_criterion_7_dirac():
    rng = np.random.default_rng(7)
    worst_gap, worst_det, worst_mod, worst_deg = 0.0, 0.0, 0.0, 0.0
    all_agree = True
    for _ in range(5):
        k1, k2 = rng.uniform(-2, 2, 2)
        M = rng.uniform(0.1, 2)
        a = rng.uniform(0.5, 1.5)
        ph = BoundaryPhases(*rng.uniform(-math.pi, math.pi, 4))
        s1 = quantize_dirac(k1, k2, M, SlabGeometry(a), ph, 5.0, "planewave")
        s2 = quantize_dirac(k1, k2, M, SlabGeometry(a), ph, 5.0, "squared")
        agree, gap = spectra_agree(s1, s2)
        all_agree = all_agree and agree
        worst_gap = max(worst_gap, gap)
        for r in list(s1) + list(s2):
            worst_det = max(worst_det, r.det_residual)
            worst_mod = max(worst_mod, r.unit_modulus_dev)
        for kk in (0.4, 1.7, 3.2):
            m = make_mode(k1, k2, kk, M)
            worst_deg = max(worst_deg, degree_consistency(m, ph, "planewave"),
                            degree_consistency(m, ph, "squared"))
    record(7, all_agree and worst_det <= 1e-8 and worst_mod <= 1e-8 and worst_deg <= 1e-10,
           f"max k gap {worst_gap:.2e}, max det {worst_det:.2e}, max ||K|-1| {worst_mod:.2e}, "
           f"degree consistency {worst_deg:.2e}")


def test_criterion_8_covariant_g():
    rng = np.random.default_rng(8)
    worst_form, worst_sq, worst_special = 0.0, 0.0, 0.0
    for _ in range(20):
        r, s = rng.uniform(-math.pi, math.pi, 2)
        for rep in REPRESENTATIONS:
            G = build_covariant_G(r, s, build_gammas(rep))
            worst_form = max(worst_form, max(G.form_deviation.values()))
            worst_sq = max(worst_sq, float(np.max(np.abs(G.matrix @ G.matrix - np.eye(4)))))
        worst_special = max(worst_special, max(g_special_cases(r).values()))
    g = build_gammas("spinor")
    worst_fix, worst_jz = 0.0, 0.0
    for _ in range(50):
        r, s = rng.uniform(-math.pi, math.pi, 2)
        a1, a2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        psi = np.array([a1, a2, cmath.exp(1j * r) * a1, cmath.exp(1j * s) * a2])
        rep = check_G_implies_zero_current(build_covariant_G(r, s, g), psi, g)
        worst_fix = max(worst_fix, rep["fixed_point_deviation"])
        worst_jz = max(worst_jz, abs(rep["jz"]))
    ok = worst_form <= 1e-12 and worst_sq <= 1e-12 and worst_special <= 1e-12 \
        and worst_fix <= 1e-10 and worst_jz <= 1e-10
    record(8, ok, f"forms {worst_form:.2e}, G^2-I {worst_sq:.2e}, special cases {worst_special:.2e}, "
                  f"fixed point {worst_fix:.2e}, |Jz| {worst_jz:.2e}")


def test_criterion_9_covariance():
    worst = 0.0
    ranks_ok = True
    for m in random_modes(109, 20):
        for gam in (0.0, 0.8):
            sp = squared_set(m, "spinor", gam)
            st = squared_set(m, "standard", gam)
            worst = max(worst, covariance_check(standard_transform(), sp, st))
            ranks = {set_rank(squared_set(m, rep, gam)) for rep in REPRESENTATIONS}
            ranks_ok = ranks_ok and len(ranks) == 1
        ranks_ok = ranks_ok and len({set_rank(u_sets(m, rep)[0]) for rep in REPRESENTATIONS}) == 1
    record(9, worst <= 1e-10 and ranks_ok, f"max conjugation deviation {worst:.2e}, ranks preserved {ranks_ok}")


def test_criterion_10_cli_determinism(capsys):
    commands = [
        ["bases", "--k1", "0.3", "--k2", "0.4", "--k", "1.2", "--mass", "1", "--verify"],
        ["maps", "--k1", "0.3", "--k2", "0.4", "--k", "1.2", "--mass", "1"],
        ["majorana", "--k1", "0.3", "--k2", "0.4", "--k", "1.2", "--mass", "1"],
        ["quantize", "dirac", "--k1", "0.3", "--k2", "0.4", "--mass", "1", "--rho", "0.3",
         "--sigma", "1.1", "--basis", "both"],
        ["quantize", "weyl", "--k1", "0.3", "--k2", "0.4", "--rho", "0.5", "--sigma", "1.7"],
        ["covariant", "--rho", "0.2", "--sigma", "0.9"],
        ["--paper-check"],
    ]
    identical = True
    for args in commands:
        outs = []
        for _ in range(2):
            assert run(args) == 0
            outs.append(capsys.readouterr().out)
        identical = identical and outs[0] == outs[1]
    # separate processes too
    proc = [subprocess.run([sys.executable, "-m", "sqdirac", *commands[3]], capture_output=True, check=True).stdout
            for _ in range(2)]
    identical = identical and proc[0] == proc[1]
    record(10, identical, f"{len(commands)} commands rerun in-process, one across processes")
