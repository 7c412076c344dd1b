"""Vanishing-current boundary conditions on the slab ``-a <= z <= a``.

The current through a plate vanishes when the spinor components are
phase-locked, ``Psi_3 = x Psi_1`` and ``Psi_4 = v Psi_2`` (and ``y``,
``w`` on the other plate). Imposing this on four plane waves gives a
homogeneous 4x4 system whose determinant is a quartic in
``K = e^{2ika}``. Quantized ``k`` are where a unit-circle root ``K_j(k)``
equals ``e^{2iak}``; they are found by grid continuation and bisection.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from . import constants as C
from .algebra import (
    CPolynomial,
    cmatrix4,
    det4,
    interpolate_det_poly,
    poly_roots,
)
from .clifford import GammaSet, build_gammas
from .solutions import ModeParams, helicity_data, make_mode

__all__ = [
    "BoundaryPhases",
    "SlabGeometry",
    "QuantizationRoot",
    "Spectrum",
    "CovariantG",
    "jz_of_spinor",
    "current_jz",
    "weyl_current",
    "boundary_matrix_planewave",
    "boundary_matrix_squared",
    "det_polynomial",
    "degree_consistency",
    "quantize_dirac",
    "weyl_K2",
    "weyl_quantize",
    "spectra_agree",
    "build_covariant_G",
    "check_G_implies_zero_current",
    "direct_boundary_rows",
    "row_scaling_mismatch",
    "g_special_cases",
]

PLANEWAVE = "planewave"
SQUARED = "squared"


@dataclass(frozen=True)
class BoundaryPhases:
    """Phase angles: rho, sigma at ``z = -a`` and mu, nu at ``z = +a``."""

    rho: float
    sigma: float
    mu: float
    nu: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.rho, self.sigma, self.mu, self.nu)):
            raise ValueError("phase angles must be finite")

    @classmethod
    def equal(cls, phase: float) -> "BoundaryPhases":
        return cls(phase, phase, phase, phase)

    @property
    def x(self) -> complex:
        return cmath.exp(1j * self.rho)

    @property
    def v(self) -> complex:
        return cmath.exp(1j * self.sigma)

    @property
    def y(self) -> complex:
        return cmath.exp(1j * self.mu)

    @property
    def w(self) -> complex:
        return cmath.exp(1j * self.nu)


@dataclass(frozen=True)
class SlabGeometry:
    a: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise ValueError("half-width a must be positive")


@dataclass(frozen=True)
class QuantizationRoot:
    """One quantized mode.

    For the Dirac problem ``K`` is the matched unit-circle root and
    ``det_residual`` the row-normalized ``|det B(k, e^{2iak})|``. For the
    Weyl problem ``K = e^{2iak}`` and ``det_residual = |e^{4iak} - K^2(k)|``.
    """

    K: complex
    k: float
    det_residual: float
    unit_modulus_dev: float
    branch_index: int
    multiplicity: int = 1

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "k": self.k,
            "det_residual": self.det_residual,
            "unit_modulus_dev": self.unit_modulus_dev,
            "branch_index": self.branch_index,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class Spectrum:
    """Result of a quantization sweep; iterates over accepted roots."""

    roots: tuple
    rejected: tuple = ()
    off_circle: tuple = ()
    flags: tuple = ()
    grid_points: int = 0
    problem: str = ""

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @property
    def ks(self) -> list:
        return [r.k for r in self.roots]

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "grid_points": self.grid_points,
            "roots": [r.to_dict() for r in self.roots],
            "rejected": [r.to_dict() for r in self.rejected],
            "off_circle": [{"k": k, "K": K, "modulus": abs(K)} for k, K in self.off_circle],
            "flags": list(self.flags),
        }


# --------------------------------------------------------------------- current


def jz_of_spinor(psi, g: GammaSet) -> complex:
    """``Psi^dagger gamma^0 gamma^3 Psi`` (returned complex so reality can be checked)."""
    psi = np.asarray(psi, dtype=complex)
    return complex(np.vdot(psi, g.gamma[0] @ g.gamma[3] @ psi))


def current_jz(columns, coeffs, g: GammaSet, point) -> float:
    """z-current of ``sum_j coeffs[j] * columns[j]`` at a spacetime point."""
    if len(columns) != len(coeffs) or not columns:
        raise ValueError("need matching, non-empty columns and coefficients")
    first = columns[0]
    if any(c.mode != first.mode or c.rep != first.rep for c in columns):
        raise ValueError("columns must share mode and representation")
    if first.rep != g.rep:
        raise ValueError("gamma set does not match the columns' representation")
    psi = sum(c * col.evaluate(point) for c, col in zip(coeffs, columns))
    j = jz_of_spinor(psi, g)
    return float(j.real)


def weyl_current(eta) -> dict:
    """Density and z-current of a two-spinor, ``J = (eta^+ eta, -eta^+ sigma eta)``.

    ``normalized`` is ``jz / jt``, the current per unit density.
    """
    e = np.asarray(eta, dtype=complex).reshape(2)
    jt = float(np.vdot(e, e).real)
    jz = float(-abs(e[0]) ** 2 + abs(e[1]) ** 2)
    return {"jt": jt, "jz": jz, "normalized": jz / jt if jt else float("nan")}


# ------------------------------------------------------------ boundary matrices


def _require_massive(m: ModeParams):
    if m.M <= 0:
        raise ValueError("boundary matrices need M > 0")
    if m.k <= 0:
        raise ValueError("boundary matrices need k > 0")


def boundary_matrix_planewave(m: ModeParams, ph: BoundaryPhases, K: complex) -> np.ndarray:
    """Boundary system on the helicity waves, columns (alpha,+k), (beta,+k), (alpha,-k), (beta,-k).

    Rows are the conditions ``Psi_3 = x Psi_1`` at ``-a``, ``Psi_3 = y Psi_1``
    at ``+a``, ``Psi_4 = v Psi_2`` at ``-a`` and ``Psi_4 = w Psi_2`` at
    ``+a``. Each row is multiplied by ``e^{+-ika}`` so that only
    ``K = e^{2ika}`` appears; rows 3 and 4 are also multiplied by
    ``(k^2 - p^2)/(k1 + i k2)`` to clear the second-component ratios.
    """
    _require_massive(m)
    h = helicity_data(m)
    al, be = h.alpha, h.beta
    k, p = m.k, m.p
    x, y, v, w = ph.x, ph.y, ph.v, ph.w
    amps = (al, be, al, be)
    # second-component ratio times (k^2 - p^2)/f, per column
    ratio = (k - p, k + p, -(k + p), -(k - p))
    near = (1, 1, K, K)  # z = -a, after multiplying by e^{ika}
    far = (K, K, 1, 1)   # z = +a, after multiplying by e^{ika}
    rows = [
        [(amps[n] - x) * near[n] for n in range(4)],
        [(amps[n] - y) * far[n] for n in range(4)],
        [(amps[n] - v) * ratio[n] * near[n] for n in range(4)],
        [(amps[n] - w) * ratio[n] * far[n] for n in range(4)],
    ]
    return cmatrix4(rows)


def boundary_matrix_squared(m: ModeParams, ph: BoundaryPhases, K: complex) -> np.ndarray:
    """Boundary system on the sin-seed squared set.

    Uses ``m = e + k``, ``n = e - k``, ``f = k1 + i k2``, ``g = k1 - i k2``.
    Each row is ``comp3 - x comp1`` (or ``comp4 - v comp2``) of the set
    evaluated at the plate, times ``2i e^{ika}``, which turns
    ``sin ka`` and ``cos ka`` into polynomials in ``K``.
    """
    _require_massive(m)
    e, M = m.epsilon, m.M
    mm, n = e + m.k, e - m.k
    f, g = m.f, m.g
    x, y, v, w = ph.x, ph.y, ph.v, ph.w
    Km = K - 1
    rows = [
        [K * (mm - x * M) - (n - x * M), -g * Km, K * (M - x * n) - (M - x * mm), -x * g * Km],
        [K * (n - y * M) - (mm - y * M), -g * Km, K * (M - y * mm) - (M - y * n), -y * g * Km],
        [-f * Km, K * (n - v * M) - (mm - v * M), -v * f * Km, K * (M - v * mm) - (M - v * n)],
        [-f * Km, K * (mm - w * M) - (n - w * M), -w * f * Km, K * (M - w * n) - (M - w * mm)],
    ]
    return cmatrix4(rows)


BUILDERS = {PLANEWAVE: boundary_matrix_planewave, SQUARED: boundary_matrix_squared}


def _builder(which: str) -> Callable:
    try:
        return BUILDERS[which]
    except KeyError:
        raise ValueError(f"unknown boundary basis {which!r}; use 'planewave' or 'squared'") from None


def det_polynomial(m: ModeParams, ph: BoundaryPhases, which: str = PLANEWAVE) -> CPolynomial:
    """``det B(K)`` as a polynomial in K, recovered by interpolation."""
    build = _builder(which)
    return interpolate_det_poly(lambda K: det4(build(m, ph, K)))


def degree_consistency(m: ModeParams, ph: BoundaryPhases, which: str = PLANEWAVE,
                       probe: complex = 0.6 + 0.45j) -> float:
    """Relative mismatch between the interpolant and a sixth direct sample."""
    poly = det_polynomial(m, ph, which)
    direct = det4(_builder(which)(m, ph, probe))
    scale = max(abs(direct), poly.max_coeff())
    return abs(poly(probe) - direct) / scale if scale else 0.0


def normalized_det(B) -> float:
    """``|det B| / prod ||row||``: scale-free, at most 1 by Hadamard's bound."""
    B = np.asarray(B)
    norms = np.linalg.norm(B, axis=1)
    if np.any(norms == 0):
        return 0.0
    return float(abs(det4(B)) / np.prod(norms))


# ----------------------------------------------------------------- continuation


def _wrap(theta: float) -> float:
    """Map an angle into (-pi, pi]."""
    w = math.remainder(theta, 2 * math.pi)
    return math.pi if w == -math.pi else w


@dataclass
class _Family:
    ident: int
    k: float
    value: complex
    theta: float


def _assign(families: List[_Family], values: list, flags: list, k: float) -> list:
    """Nearest-argument matching of new values to live families.

    Returns ``(family, value)`` pairs plus unmatched values as ``(None, value)``.
    Families are served in id order and ties go to the smallest index.
    """
    free = list(range(len(values)))
    pairs = []
    for fam in families:
        if not free:
            break
        dists = [abs(cmath.phase(values[i] / fam.value)) for i in free]
        order = sorted(range(len(free)), key=lambda j: (dists[j], free[j]))
        best = order[0]
        if len(order) > 1:
            second = order[1]
            close = dists[second] - dists[best] < 1e-3
            distinct = abs(values[free[second]] - values[free[best]]) > C.CANDIDATE_CIRCLE_TOL
            if close and distinct:
                flags.append(f"ambiguous root tracking near k={k:.17g} (branch {fam.ident})")
        pairs.append((fam, values[free[best]]))
        free.pop(best)
    pairs.extend((None, values[i]) for i in free)
    return pairs


def _sweep(k_grid, candidates: Callable, target: Callable, refine: Callable, flags: list):
    """Track candidate families along ``k_grid``; refine every sign change of the mismatch.

    ``candidates(k)`` returns unit-modulus values, ``target(k)`` the phase
    they must match, ``refine(lo, hi, value_lo, family)`` the root or None.
    """
    families: List[_Family] = []
    next_id = 0
    found = []
    for k in k_grid:
        vals = candidates(k)
        pairs = _assign(families, vals, flags, k)
        alive = []
        for fam, val in pairs:
            theta = _wrap(target(k) - cmath.phase(val))
            if fam is None:
                fam = _Family(next_id, k, val, theta)
                next_id += 1
                if theta == 0.0:
                    found.append(refine(k, k, val, fam.ident))
                alive.append(fam)
                continue
            if theta == 0.0:
                found.append(refine(k, k, val, fam.ident))
            elif fam.theta * theta < 0 and abs(fam.theta - theta) < math.pi:
                found.append(refine(fam.k, k, fam.value, fam.ident))
            fam.k, fam.value, fam.theta = k, val, theta
            alive.append(fam)
        families = sorted(alive, key=lambda f: f.ident)
    return [r for r in found if r is not None]


def _grid(k_max: float, a: float, n_grid: Optional[int]) -> np.ndarray:
    if not (math.isfinite(k_max) and k_max > 0):
        raise ValueError("k_max must be positive")
    n = math.ceil(2 * a * k_max / C.GRID_PHASE_STEP)
    n = max(n, 64, n_grid or 0)
    dk = k_max / n
    if 2 * a * dk >= math.pi / 4:
        raise ValueError("grid too coarse: need 2 a dk < pi/4")
    # start just above zero; k = 0 itself is excluded
    return np.concatenate(([dk * 1e-3], dk * np.arange(1, n + 1)))


def _bisect(lo: float, hi: float, value_lo: complex, candidates: Callable, target: Callable,
            tol: float = 1e-14):
    """Bisect the mismatch of one tracked family on ``[lo, hi]``.

    Returns ``(k, value)`` with the family followed by nearest argument.
    """
    def pick(k, ref):
        vals = candidates(k)
        if not vals:
            return None
        return min(vals, key=lambda v: abs(cmath.phase(v / ref)))

    v_lo = value_lo
    th_lo = _wrap(target(lo) - cmath.phase(v_lo))
    if lo == hi:
        return lo, v_lo
    for _ in range(C.BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        v_mid = pick(mid, v_lo)
        if v_mid is None:
            return None
        th_mid = _wrap(target(mid) - cmath.phase(v_mid))
        if th_mid == 0.0 or hi - lo <= tol * max(1.0, mid):
            return mid, v_mid
        if th_lo * th_mid < 0:
            hi = mid
        else:
            lo, v_lo, th_lo = mid, v_mid, th_mid
    return 0.5 * (lo + hi), v_lo


def _dedupe(roots: list) -> list:
    """Merge roots at the same k and K (coincident families) into one with multiplicity."""
    roots = sorted(roots, key=lambda r: (r.k, r.branch_index))
    out: list = []
    for r in roots:
        if out and abs(r.k - out[-1].k) <= C.DUPLICATE_K_TOL * max(1.0, r.k) \
                and abs(r.K - out[-1].K) <= 1e-7:
            prev = out[-1]
            out[-1] = QuantizationRoot(prev.K, prev.k, max(prev.det_residual, r.det_residual),
                                       max(prev.unit_modulus_dev, r.unit_modulus_dev),
                                       prev.branch_index, prev.multiplicity + r.multiplicity)
        else:
            out.append(r)
    return out


def quantize_dirac(k1: float, k2: float, M: float, geom: SlabGeometry, ph: BoundaryPhases,
                   k_max: float, which: str = PLANEWAVE, n_grid: Optional[int] = None,
                   circle_tol: float = C.UNIT_CIRCLE_TOL) -> Spectrum:
    """Quantized ``k`` of a massive Dirac particle between the plates.

    Parameters
    ----------
    k1, k2 : float
        Transverse momentum, not both zero.
    M : float
        Mass, positive.
    geom : SlabGeometry
    ph : BoundaryPhases
    k_max : float
        Upper end of the sweep.
    which : {"planewave", "squared"}
        Basis used to write the boundary system.
    n_grid : int, optional
        Minimum number of grid intervals.

    Returns
    -------
    Spectrum
        Accepted roots sorted by k. A root is accepted when
        ``||K| - 1|``, ``|e^{2iak} - K|`` and the normalized determinant
        are all below ``circle_tol``; anything else goes to ``rejected``.
    """
    if k1 == 0 and k2 == 0:
        raise ValueError("need nonzero transverse momentum (k1, k2)")
    if M <= 0:
        raise ValueError("quantize_dirac needs M > 0")
    build = _builder(which)
    a = geom.a
    flags: list = []
    off_circle: list = []
    raw_moduli: dict = {}

    def candidates(k):
        m = make_mode(k1, k2, k, M)
        poly = interpolate_det_poly(lambda K: det4(build(m, ph, K))).trimmed(1e-13)
        if poly.degree < 1:
            flags.append(f"degenerate determinant polynomial at k={k:.17g}")
            return []
        roots = poly_roots(poly)
        out = []
        for r in roots:
            dev = abs(abs(r) - 1.0)
            if dev <= C.CANDIDATE_CIRCLE_TOL:
                u = r / abs(r)
                raw_moduli[(k, u)] = dev
                out.append(u)
            else:
                off_circle.append((k, r))
        return out

    def target(k):
        return 2 * a * k

    def refine(lo, hi, v_lo, ident):
        res = _bisect(lo, hi, v_lo, candidates, target)
        if res is None:
            flags.append(f"lost branch {ident} while refining near k={lo:.17g}")
            return None
        k, K = res
        m = make_mode(k1, k2, k, M)
        E = cmath.exp(2j * a * k)
        return QuantizationRoot(
            K=complex(K),
            k=float(k),
            det_residual=normalized_det(build(m, ph, E)),
            unit_modulus_dev=float(raw_moduli.get((k, K), 0.0)),
            branch_index=ident,
        )

    grid = _grid(k_max, a, n_grid)
    found = _sweep(grid, candidates, target, refine, flags)
    accepted, rejected = [], []
    for r in _dedupe(found):
        if r.k > k_max:
            continue
        match = abs(cmath.exp(2j * a * r.k) - r.K)
        ok = r.unit_modulus_dev <= circle_tol and match <= circle_tol and r.det_residual <= C.DET_RESIDUAL_TOL
        (accepted if ok else rejected).append(r)
    if not accepted:
        flags.append("empty spectrum")
    return Spectrum(tuple(accepted), tuple(rejected), tuple(off_circle[:64]), tuple(flags),
                    len(grid), f"dirac/{which}")


# ------------------------------------------------------------------------- Weyl


def weyl_K2(k1: float, k2: float, k: float, rho: float, sigma: float) -> complex:
    """``(x + f)(y + g) / ((x + g)(y + f))`` with ``x = e^{i rho}``, ``y = e^{i sigma}``.

    Here ``f = (k1 + i k2)/(e - k)`` and ``g = (k1 + i k2)/(e + k)``.
    """
    e = math.sqrt(k1 * k1 + k2 * k2 + k * k)
    if e - k == 0 or e + k == 0:
        raise ValueError("Weyl ratio undefined: need k1^2 + k2^2 > 0")
    q = complex(k1, k2)
    f, g = q / (e - k), q / (e + k)
    x, y = cmath.exp(1j * rho), cmath.exp(1j * sigma)
    den = (x + g) * (y + f)
    if den == 0:
        raise ZeroDivisionError("Weyl ratio has a vanishing denominator")
    return (x + f) * (y + g) / den


def weyl_quantize(k1: float, k2: float, geom: SlabGeometry, rho: float, sigma: float,
                  k_max: float, n_grid: Optional[int] = None,
                  tol: float = C.UNIT_CIRCLE_TOL) -> Spectrum:
    """Solve ``e^{4iak} = K^2(k)`` for the massless two-component field."""
    if k1 == 0 and k2 == 0:
        raise ValueError("need nonzero transverse momentum (k1, k2)")
    a = geom.a
    flags: list = []

    def candidates(k):
        return [weyl_K2(k1, k2, k, rho, sigma)]

    def target(k):
        return 4 * a * k

    def refine(lo, hi, v_lo, ident):
        res = _bisect(lo, hi, v_lo, candidates, target)
        if res is None:
            return None
        k, K2 = res
        K2 = weyl_K2(k1, k2, k, rho, sigma)
        return QuantizationRoot(
            K=cmath.exp(2j * a * k),
            k=float(k),
            det_residual=abs(cmath.exp(4j * a * k) - K2),
            unit_modulus_dev=abs(abs(K2) - 1.0),
            branch_index=ident,
        )

    # e^{4iak} winds twice as fast, so halve the step
    grid = _grid(k_max, 2 * a, n_grid)
    found = _sweep(grid, candidates, target, refine, flags)
    accepted, rejected = [], []
    for r in _dedupe(found):
        if r.k > k_max:
            continue
        ok = r.det_residual <= tol and r.unit_modulus_dev <= tol
        (accepted if ok else rejected).append(r)
    if not accepted:
        flags.append("empty spectrum")
    return Spectrum(tuple(accepted), tuple(rejected), (), tuple(flags), len(grid), "weyl")


def spectra_agree(s1: Spectrum, s2: Spectrum, tol: float = 1e-6) -> tuple:
    """Whether two spectra have the same distinct k values; returns (flag, max gap)."""
    a, b = s1.ks, s2.ks
    if len(a) != len(b):
        return False, float("inf")
    gap = max((abs(x - y) for x, y in zip(a, b)), default=0.0)
    return gap <= tol, gap


# ------------------------------------------------------------------ covariant G


@dataclass(frozen=True, eq=False)
class CovariantG:
    """Boundary operator with ``G Psi = Psi`` encoding the phase locking."""

    rho: float
    sigma: float
    matrix: np.ndarray
    coeffs: tuple
    rep: str = "spinor"
    form_deviation: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        n0, n3, m0, m3 = self.coeffs
        return {
            "rho": self.rho,
            "sigma": self.sigma,
            "rep": self.rep,
            "matrix": self.matrix,
            "coeffs": {"n0": n0, "n3": n3, "m0": m0, "m3": m3},
            "form_deviation": self.form_deviation,
            "square_deviation": float(np.max(np.abs(self.matrix @ self.matrix - np.eye(4)))),
        }


def _g_coeffs(rho: float, sigma: float) -> tuple:
    return (
        (math.cos(rho) + math.cos(sigma)) / 2,
        (1j * math.sin(rho) - 1j * math.sin(sigma)) / 2,
        (1j * math.sin(rho) + 1j * math.sin(sigma)) / 2,
        (math.cos(rho) - math.cos(sigma)) / 2,
    )


def _g_explicit_spinor(rho: float, sigma: float) -> np.ndarray:
    G = np.zeros((4, 4), dtype=complex)
    G[0, 2] = cmath.exp(-1j * rho)
    G[1, 3] = cmath.exp(-1j * sigma)
    G[2, 0] = cmath.exp(1j * rho)
    G[3, 1] = cmath.exp(1j * sigma)
    return G


def _g_projector(rho: float, sigma: float, g: GammaSet) -> np.ndarray:
    eye = np.eye(4)
    g0, g3, g5 = g.gamma[0], g.gamma[3], g.gamma5
    Pp, Pm = (eye + g5) / 2, (eye - g5) / 2
    up, dn = (g0 + g3) / 2, (g0 - g3) / 2
    return (cmath.exp(1j * rho) * Pp @ up + cmath.exp(-1j * rho) * Pm @ dn
            + cmath.exp(1j * sigma) * Pp @ dn + cmath.exp(-1j * sigma) * Pm @ up)


def build_covariant_G(rho: float, sigma: float, g: Optional[GammaSet] = None) -> CovariantG:
    """G from its gamma-matrix expansion, checked against two other routes.

    In the spinor basis the routes are the explicit phase matrix, the
    ``(n0, n3, m0, m3)`` expansion and the chiral-projector form. In any
    other basis the explicit matrix is transported by that basis'
    transform.
    """
    g = g if g is not None else build_gammas("spinor")
    n0, n3, m0, m3 = _g_coeffs(rho, sigma)
    g0, g3, g5 = g.gamma[0], g.gamma[3], g.gamma5
    coeff_form = n0 * g0 + n3 * g3 + g5 @ (m0 * g0 + m3 * g3)
    projector = _g_projector(rho, sigma, g)
    explicit = _g_explicit_spinor(rho, sigma)
    if g.rep != "spinor":
        if g.transform is None:
            raise ValueError("non-spinor gamma set carries no transform")
        explicit = g.transform.conjugate(explicit)
    dev = {
        "explicit_vs_coefficients": float(np.max(np.abs(explicit - coeff_form))),
        "explicit_vs_projectors": float(np.max(np.abs(explicit - projector))),
    }
    return CovariantG(float(rho), float(sigma), cmatrix4(coeff_form), (n0, n3, m0, m3), g.rep, dev)


def check_G_implies_zero_current(G: CovariantG, psi, g: GammaSet,
                                 tol: float = C.CURRENT_TOL) -> dict:
    """Report ``||G Psi - Psi||`` and ``J^z``; asserts only the sufficient direction."""
    if G.rep != g.rep:
        raise ValueError("G and gamma set are in different representations")
    psi = np.asarray(psi, dtype=complex).reshape(4)
    fixed = float(np.max(np.abs(G.matrix @ psi - psi)))
    jz = jz_of_spinor(psi, g)
    is_fixed = fixed <= tol
    return {
        "fixed_point_deviation": fixed,
        "jz": jz.real,
        "jz_imag": jz.imag,
        "is_fixed_point": is_fixed,
        "current_vanishes": abs(jz) <= tol,
        "implication_holds": (abs(jz) <= tol) if is_fixed else None,
    }


# ------------------------------------------------------------------ direct oracle


def direct_boundary_rows(columns, ph: BoundaryPhases, a: float) -> np.ndarray:
    """Phase-locking conditions evaluated on solution columns at the plates.

    Row order is ``Psi_3 - x Psi_1`` at ``-a``, ``Psi_3 - y Psi_1`` at
    ``+a``, ``Psi_4 - v Psi_2`` at ``-a`` and ``Psi_4 - w Psi_2`` at ``+a``,
    with the transverse phase dropped. Any correct boundary matrix is a
    row scaling of this one at ``K = e^{2ika}``.
    """
    lo = np.column_stack([c.evaluate((0.0, 0.0, 0.0, -a)) for c in columns])
    hi = np.column_stack([c.evaluate((0.0, 0.0, 0.0, a)) for c in columns])
    return cmatrix4([
        lo[2] - ph.x * lo[0],
        hi[2] - ph.y * hi[0],
        lo[3] - ph.v * lo[1],
        hi[3] - ph.w * hi[1],
    ])


def row_scaling_mismatch(B, ref) -> list:
    """Per-row relative residual of the best fit ``B_i ~ c_i ref_i``."""
    out = []
    for b, r in zip(np.asarray(B), np.asarray(ref)):
        rr = np.vdot(r, r).real
        if rr == 0:
            out.append(float(np.linalg.norm(b)))
            continue
        c = np.vdot(r, b) / rr
        scale = max(np.linalg.norm(b), 1e-300)
        out.append(float(np.linalg.norm(b - c * r) / scale))
    return out


def g_special_cases(rho: float, g: Optional[GammaSet] = None) -> dict:
    """Deviation of G from its reduced forms at ``sigma = rho`` and ``sigma = -rho``."""
    g = g if g is not None else build_gammas("spinor")
    eye = np.eye(4)
    g0, g3, g5 = g.gamma[0], g.gamma[3], g.gamma5
    ep, em = cmath.exp(1j * rho), cmath.exp(-1j * rho)
    equal = ep * (eye + g5) / 2 @ g0 + em * (eye - g5) / 2 @ g0
    opposite = ep * (g0 + g3) / 2 + em * (g0 - g3) / 2
    return {
        "equal_phases": float(np.max(np.abs(build_covariant_G(rho, rho, g).matrix - equal))),
        "opposite_phases": float(np.max(np.abs(build_covariant_G(rho, -rho, g).matrix - opposite))),
    }
