"""Small dense complex kernel: 4x4 determinant, rank, polynomial roots.

Everything here is deterministic and free of eigensolvers, so results are
reproducible bit-for-bit across runs.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import constants as C

__all__ = [
    "RootFindingError",
    "CPolynomial",
    "cmatrix4",
    "det4",
    "numerical_rank",
    "poly_roots",
    "unit_circle_filter",
    "interpolate_det_poly",
    "DEFAULT_NODES",
]

EPS = sys.float_info.epsilon
DEFAULT_NODES = (0j, 1 + 0j, -1 + 0j, 1j, -1j)


class RootFindingError(ArithmeticError):
    """Raised when an iterative solver fails to meet its residual target.

    Attributes
    ----------
    residuals : list of float
        Residual magnitudes at the last iterate, one per root.
    """

    def __init__(self, message: str, residuals: Sequence[float] = ()):
        super().__init__(message)
        self.residuals = list(residuals)


def cmatrix4(entries) -> np.ndarray:
    """Validate and freeze a 4x4 complex matrix.

    Returns a read-only ``complex128`` copy. Raises ``ValueError`` for a
    wrong shape or non-finite entries.
    """
    m = np.array(entries, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    m.setflags(write=False)
    return m


def _det3(a) -> complex:
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


def det4(m) -> complex:
    """Determinant of a 4x4 complex matrix by cofactor expansion.

    Parameters
    ----------
    m : array_like, shape (4, 4)

    Returns
    -------
    complex
    """
    a = cmatrix4(m).tolist()
    total = 0j
    for j in range(4):
        if a[0][j] == 0:
            continue
        minor = [[row[c] for c in range(4) if c != j] for row in a[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * a[0][j] * _det3(minor)
    return complex(total)


def numerical_rank(m, tau: float = C.RANK_TAU) -> int:
    """Rank by complete-pivoting Gaussian elimination.

    A pivot counts when its magnitude exceeds ``tau`` times the largest
    entry magnitude of the input. Works for any 2-D shape, though the
    library only uses it on 4xN matrices.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    a = np.array(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError("rank needs a 2-D array")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    if scale == 0.0:
        return 0
    thresh = tau * scale
    rows, cols = a.shape
    rank = 0
    for step in range(min(rows, cols)):
        sub = np.abs(a[step:, step:])
        # argmax returns the first maximum in row-major order: deterministic ties
        flat = int(np.argmax(sub))
        i, j = divmod(flat, sub.shape[1])
        if sub[i, j] <= thresh:
            break
        i += step
        j += step
        a[[step, i], :] = a[[i, step], :]
        a[:, [step, j]] = a[:, [j, step]]
        piv = a[step, step]
        factors = a[step + 1:, step] / piv
        a[step + 1:, step:] -= np.outer(factors, a[step, step:])
        rank += 1
    return rank


@dataclass(frozen=True)
class CPolynomial:
    """Complex polynomial with coefficients in ascending degree."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        if not cs:
            raise ValueError("polynomial needs at least one coefficient")
        if not all(cmath.isfinite(c) for c in cs):
            raise ValueError("non-finite coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "CPolynomial":
        if self.degree == 0:
            return CPolynomial((0j,))
        return CPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def max_coeff(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def trimmed(self, rel_tol: float = 0.0) -> "CPolynomial":
        """Drop leading coefficients with magnitude <= rel_tol * max|coeff|."""
        scale = self.max_coeff()
        cs = list(self.coeffs)
        while len(cs) > 1 and abs(cs[-1]) <= rel_tol * scale:
            cs.pop()
        return CPolynomial(tuple(cs))


def _cluster(roots: list, radius: float) -> list:
    """Single-linkage groups of root indices closer than ``radius``."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) <= radius * max(1.0, abs(roots[i])):
                parent[find(j)] = find(i)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _newton(p: CPolynomial, dp: CPolynomial, z: complex, steps: int) -> complex:
    best, best_res = z, abs(p(z))
    for _ in range(steps):
        d = dp(best)
        if d == 0:
            break
        cand = best - p(best) / d
        res = abs(p(cand))
        if not res < best_res:
            break
        best, best_res = cand, res
    return best


def poly_roots(
    p: CPolynomial,
    *,
    max_iter: int = C.ROOT_MAX_ITER,
    rel_residual: float = C.ROOT_RESIDUAL_REL,
    cluster_radius: float = C.CLUSTER_RADIUS,
) -> list:
    """All complex roots, with multiplicity, by Durand-Kerner iteration.

    Initial points are ``r * u * w**j`` with ``w = exp(2 pi i / n)``, ``r``
    the Fujiwara bound and ``u = exp(0.4 i)`` a fixed rotation that keeps
    the start off any symmetry axis of real or even polynomials. Simple
    roots get Newton polish. Clusters of near-equal roots are replaced by
    the root of the (m-1)-th derivative when that lowers the residual,
    which recovers multiple roots to full precision.

    Raises
    ------
    ValueError
        Degree below 1 after trimming exact zero leading coefficients.
    RootFindingError
        Some root misses ``|p(r)| <= rel_residual * max|coeff| * max(1, |r|)**n``.
    """
    p = p.trimmed(0.0)
    n = p.degree
    if n < 1:
        raise ValueError("poly_roots needs degree >= 1")
    lead = p.coeffs[-1]
    monic = CPolynomial(tuple(c / lead for c in p.coeffs))
    if n == 1:
        roots = [-monic.coeffs[0]]
    else:
        bound = 2.0 * max(
            abs(monic.coeffs[n - j]) ** (1.0 / j) for j in range(1, n + 1)
        )
        r0 = bound if bound > 0 else 1.0
        rot = cmath.exp(0.4j)
        z = [r0 * rot * cmath.exp(2j * math.pi * j / n) for j in range(n)]
        for _ in range(max_iter):
            biggest = 0.0
            for i in range(n):
                denom = 1 + 0j
                for j in range(n):
                    if j != i:
                        denom *= z[i] - z[j]
                if denom == 0:
                    # coincident iterates; nudge deterministically
                    denom = complex(C.ROOT_STEP_TOL)
                step = monic(z[i]) / denom
                z[i] -= step
                biggest = max(biggest, abs(step) / max(1.0, abs(z[i])))
            if biggest <= C.ROOT_STEP_TOL:
                break
        roots = z

    dmonic = monic.derivative()
    polished = list(roots)
    for group in _cluster(polished, cluster_radius):
        if len(group) == 1:
            i = group[0]
            polished[i] = _newton(monic, dmonic, polished[i], 4)
            continue
        m = len(group)
        q = monic
        for _ in range(m - 1):
            q = q.derivative()
        centre = sum(polished[i] for i in group) / m
        cand = _newton(q, q.derivative(), centre, 8)
        worst = max(abs(monic(polished[i])) for i in group)
        # both residuals may sit at the rounding floor of Horner evaluation
        floor = 8 * EPS * sum(abs(c) for c in monic.coeffs) * max(1.0, abs(cand)) ** n
        if abs(monic(cand)) <= max(worst, floor):
            for i in group:
                polished[i] = cand

    scale = p.max_coeff()
    residuals = [abs(p(r)) for r in polished]
    limits = [rel_residual * scale * max(1.0, abs(r)) ** n for r in polished]
    if any(res > lim for res, lim in zip(residuals, limits)):
        raise RootFindingError(
            f"root residuals above tolerance after {max_iter} iterations", residuals
        )
    return [complex(r) for r in polished]


def unit_circle_filter(roots: Sequence[complex], tol: float = C.UNIT_CIRCLE_TOL) -> list:
    """Keep roots with ``||r| - 1| <= tol`` and normalize them to ``|r| = 1``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return [complex(r / abs(r)) for r in roots if abs(abs(r) - 1.0) <= tol]


def interpolate_det_poly(
    func: Callable[[complex], complex], nodes: Sequence[complex] = DEFAULT_NODES
) -> CPolynomial:
    """Interpolating polynomial of degree <= len(nodes) - 1.

    Uses Newton divided differences on the given nodes, then expands to
    the monomial basis. With the default five nodes this recovers any
    quartic exactly up to roundoff.
    """
    xs = [complex(x) for x in nodes]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    dd = [complex(func(x)) for x in xs]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner-style expansion of the Newton form
    coeffs = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [0j] + coeffs
        for j in range(len(coeffs)):
            shifted[j] -= xs[i] * coeffs[j]
        shifted[0] += dd[i]
        coeffs = shifted
    return CPolynomial(tuple(coeffs))
