"""Linear maps between the squared sets and the helicity plane waves.

All matrices are derived by solving small linear systems; the printed
closed forms are only compared against, never used to build anything.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import constants as C
from . import displays
from .algebra import cmatrix4, det4, numerical_rank
from .solutions import (
    ModeParams,
    SolutionSet,
    StructuredSolution,
    phi_basis,
    primed_set,
    squared_set,
    u_sets,
)

__all__ = [
    "ExpansionError",
    "ExpansionCoeffs",
    "BasisMatrix",
    "expand_u_in_phi",
    "expansion_matrix",
    "build_basis_matrices",
    "invert_basis_matrix",
    "composite_maps",
    "linear_combination",
    "reconstruction_residuals",
    "map_report",
    "display_comparison",
]


class ExpansionError(ArithmeticError):
    """An overdetermined expansion system turned out inconsistent."""


@dataclass(frozen=True, eq=False)
class ExpansionCoeffs:
    """Coefficients of ``U_1 = a X + b Y`` and ``U_2 = c X + d Y``.

    ``(X, Y)`` is ``(Phi_1, Phi_3)`` for U and ``(Phi_2, Phi_4)`` for U'.
    ``rows`` holds the coefficient pairs of all four columns.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    primed: bool
    rows: np.ndarray
    residual: float


@dataclass(frozen=True, eq=False)
class BasisMatrix:
    entries: np.ndarray
    tag: str

    def __post_init__(self):
        object.__setattr__(self, "entries", cmatrix4(self.entries))


def _single_wave(s: SolutionSet) -> bool:
    """True for e^{ikz}-only sets, False for e^{-ikz}-only sets."""
    plus = any(np.any(c.first != 0) for c in s.columns)
    minus = any(np.any(c.second != 0) for c in s.columns)
    if plus == minus or s.columns[0].form != "transverse_z":
        raise ValueError("expansion needs a single-direction plane-wave set")
    return plus


def expand_u_in_phi(u: SolutionSet, phi: SolutionSet, tol: float = C.EXPANSION_TOL) -> ExpansionCoeffs:
    """Expand each column of U (or U') in the two matching helicity waves.

    The 2x2 system from the first two spinor rows is solved, then all
    four rows are checked.
    """
    if u.mode != phi.mode:
        raise ValueError("sets belong to different modes")
    plus = _single_wave(u)
    if plus:
        basis = np.column_stack([phi.columns[0].first, phi.columns[2].first])
        targets = [c.first for c in u.columns]
    else:
        basis = np.column_stack([phi.columns[1].second, phi.columns[3].second])
        targets = [c.second for c in u.columns]
    rows = np.array([np.linalg.solve(basis[:2], t[:2]) for t in targets])
    resid = max(float(np.max(np.abs(basis @ r - t))) for r, t in zip(rows, targets))
    scale = max(1.0, max(float(np.max(np.abs(t))) for t in targets))
    if resid > tol * scale:
        raise ExpansionError(f"expansion rows inconsistent, residual {resid:.3e}")
    rows.setflags(write=False)
    (a, b), (c, d) = rows[0], rows[1]
    return ExpansionCoeffs(complex(a), complex(b), complex(c), complex(d), not plus, rows, resid)


def expansion_matrix(e: ExpansionCoeffs) -> np.ndarray:
    """4x4 coefficients of U_j (or U'_j) on (Phi_1..Phi_4)."""
    out = np.zeros((4, 4), dtype=complex)
    slots = (1, 3) if e.primed else (0, 2)
    out[:, slots[0]] = e.rows[:, 0]
    out[:, slots[1]] = e.rows[:, 1]
    return out


def _check_mode(m: ModeParams):
    if m.M <= 0 or m.p <= 0 or m.k == 0:
        raise ValueError("degenerate mode: need M > 0, p > 0 and k != 0")


def build_basis_matrices(m: ModeParams) -> dict:
    """Matrices a, a', S = -a' + i a and S' = -a' - i a.

    Rows follow ``Psi_l = a_ln Phi_n`` with ``Psi = (U - U')/2i`` and
    ``Psi' = -(U + U')/2``.
    """
    _check_mode(m)
    phi = phi_basis(m)
    U, Up = u_sets(m)
    cu = expansion_matrix(expand_u_in_phi(U, phi))
    cup = expansion_matrix(expand_u_in_phi(Up, phi))
    a = (cu - cup) / 2j
    ap = -(cu + cup) / 2
    return {
        "a": BasisMatrix(a, "a"),
        "a_primed": BasisMatrix(ap, "a_primed"),
        "S": BasisMatrix(-ap + 1j * a, "S"),
        "S_primed": BasisMatrix(-ap - 1j * a, "S_primed"),
    }


def invert_basis_matrix(b: BasisMatrix, tol: float = C.EXPANSION_TOL) -> np.ndarray:
    """Numeric inverse of a full-rank basis matrix (a or a')."""
    if b.tag not in ("a", "a_primed"):
        raise ValueError(f"matrix {b.tag!r} is not meant to be inverted")
    if abs(det4(b.entries)) <= C.SINGULAR_DET:
        raise np.linalg.LinAlgError("basis matrix is singular")
    inv = np.linalg.inv(b.entries)
    dev = float(np.max(np.abs(b.entries @ inv - np.eye(4))))
    if dev > tol:
        raise np.linalg.LinAlgError(f"inverse check failed, deviation {dev:.3e}")
    return cmatrix4(inv)


def composite_maps(m: ModeParams) -> tuple:
    """``(a' a^{-1}, a a'^{-1})``: Psi' from Psi and Psi from Psi'.

    Right division is done by solving the transposed systems, which keeps
    the product of the two maps closer to the identity than explicit
    inverses do when k is small.
    """
    mats = build_basis_matrices(m)
    a, ap = mats["a"], mats["a_primed"]
    invert_basis_matrix(a)
    invert_basis_matrix(ap)
    c1 = np.linalg.solve(a.entries.T, ap.entries.T).T
    c2 = np.linalg.solve(ap.entries.T, a.entries.T).T
    return cmatrix4(c1), cmatrix4(c2)


def linear_combination(s: SolutionSet, coeffs) -> StructuredSolution:
    """``sum_n coeffs[n] * s.columns[n]``."""
    out = s.columns[0].scaled(coeffs[0])
    for c, col in zip(coeffs[1:], s.columns[1:]):
        out = out + col.scaled(c)
    return out


def _set_distance(x: SolutionSet, cols) -> float:
    return max(
        float(max(np.max(np.abs(a.first - b.first)), np.max(np.abs(a.second - b.second))))
        for a, b in zip(x.columns, cols)
    )


def reconstruction_residuals(m: ModeParams) -> dict:
    """Max coefficient error of every map identity at one mode."""
    mats = build_basis_matrices(m)
    phi = phi_basis(m)
    psi = squared_set(m, "spinor", 0.0)
    psip = primed_set(m, "spinor")
    a, ap = mats["a"].entries, mats["a_primed"].entries
    c1, c2 = composite_maps(m)
    return {
        "psi_from_phi": _set_distance(psi, [linear_combination(phi, row) for row in a]),
        "psi_primed_from_phi": _set_distance(psip, [linear_combination(phi, row) for row in ap]),
        "psi_primed_from_psi": _set_distance(psip, [linear_combination(psi, row) for row in c1]),
        "psi_from_psi_primed": _set_distance(psi, [linear_combination(psip, row) for row in c2]),
        "composites_inverse": float(np.max(np.abs(c1 @ c2 - np.eye(4)))),
    }


def _dev(x, y) -> float:
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def _best_ratio(x, y) -> complex:
    """Least-squares scalar r minimizing ||x - r y||."""
    x = np.asarray(x).ravel()
    y = np.asarray(y).ravel()
    return complex(np.vdot(y, x) / np.vdot(y, y))


def display_comparison(m: ModeParams) -> dict:
    """Deviation of every printed map display from the derived matrix."""
    mats = build_basis_matrices(m)
    a, ap = mats["a"].entries, mats["a_primed"].entries
    ai, api = invert_basis_matrix(mats["a"]), invert_basis_matrix(mats["a_primed"])
    c1, c2 = composite_maps(m)
    phi = phi_basis(m)
    U, Up = u_sets(m)
    eu = expand_u_in_phi(U, phi)
    eup = expand_u_in_phi(Up, phi)
    closed = displays.expansion_coeffs(m)
    solved = {"a": eu.a, "b": eu.b, "c": eu.c, "d": eu.d,
              "a_primed": eup.a, "b_primed": eup.b, "c_primed": eup.c, "d_primed": eup.d}
    out = {
        "expansion_coeffs": max(abs(solved[k] - closed[k]) for k in closed),
        "u_in_phi": _dev(eu.rows, displays.u_in_phi(m)),
        "u_primed_in_phi": _dev(eup.rows, displays.u_primed_in_phi(m)),
        "i_a": _dev(1j * a, displays.i_times_a(m)),
        "minus_a_primed": _dev(-ap, displays.minus_a_primed(m)),
        "S": _dev(mats["S"].entries, displays.s_matrix(m)),
        "S_primed": _dev(mats["S_primed"].entries, displays.s_primed_matrix(m)),
        "det_a": abs(det4(a) - displays.det_a(m)),
        "det_a_primed": abs(det4(ap) - displays.det_a_primed(m)),
        "a_inverse": _dev(ai, displays.a_inverse(m)),
        "a_primed_inverse": _dev(api, displays.a_primed_inverse(m)),
        "composite_primed_from_plain": _dev(c1, displays.composite_primed_from_plain(m)),
        "composite_plain_from_primed": _dev(c2, displays.composite_plain_from_primed(m)),
    }
    ratios = {
        "det_a": det4(a) / displays.det_a(m),
        "det_a_primed": det4(ap) / displays.det_a_primed(m),
        "a_primed_inverse": _best_ratio(api, displays.a_primed_inverse(m)),
    }
    return {"deviation": out, "ratio": ratios}


def map_report(m: ModeParams) -> dict:
    """Everything the ``maps`` command prints for one mode."""
    mats = build_basis_matrices(m)
    c1, c2 = composite_maps(m)
    matrices = {k: v.entries for k, v in mats.items()}
    matrices["composite_primed_from_plain"] = c1
    matrices["composite_plain_from_primed"] = c2
    return {
        "mode": m.as_dict(),
        "matrices": matrices,
        "ranks": {k: numerical_rank(v.entries) for k, v in mats.items()},
        "determinants": {k: det4(v.entries) for k, v in mats.items()},
        "residuals": reconstruction_residuals(m),
        "printed_display": display_comparison(m),
    }
