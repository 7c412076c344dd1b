"""Gamma-matrix representations and the similarity transforms between them.

Metric signature is (+, -, -, -). The spinor set is the reference; the
standard and Majorana sets are reached by explicit similarity transforms,
and gamma5 is always transported from the spinor one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import constants as C
from . import displays
from .algebra import cmatrix4

__all__ = [
    "REPRESENTATIONS",
    "METRIC",
    "CliffordError",
    "RepTransform",
    "GammaSet",
    "pauli",
    "clifford_deviation",
    "build_gammas",
    "majorana_transform",
    "standard_transform",
    "identity_transform",
    "transform_gammas",
    "covariance_check",
    "gamma5_product_relation",
]

REPRESENTATIONS = ("spinor", "standard", "majorana")
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


class CliffordError(ValueError):
    """A gamma set fails the anticommutation or gamma5 invariants."""


def pauli() -> tuple:
    """Identity and the three Pauli matrices as complex 2x2 arrays."""
    return (
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    )


def _blocks(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]]).astype(complex)


@dataclass(frozen=True, eq=False)
class RepTransform:
    """Similarity transform ``gamma -> S gamma S^{-1}``."""

    S: np.ndarray
    S_inv: np.ndarray
    name: str = "custom"

    def __post_init__(self):
        S = cmatrix4(self.S)
        S_inv = cmatrix4(self.S_inv)
        dev = float(np.max(np.abs(S @ S_inv - np.eye(4))))
        if dev > C.CLIFFORD_TOL:
            raise CliffordError(f"S * S_inv deviates from identity by {dev:.3e}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "S_inv", S_inv)

    def conjugate(self, m) -> np.ndarray:
        return self.S @ np.asarray(m) @ self.S_inv

    def inverse(self) -> "RepTransform":
        return RepTransform(self.S_inv, self.S, name=f"inverse({self.name})")

    def then(self, other: "RepTransform") -> "RepTransform":
        """Composite transform: apply ``self`` first, then ``other``."""
        return RepTransform(other.S @ self.S, self.S_inv @ other.S_inv,
                            name=f"{other.name}*{self.name}")


def clifford_deviation(gamma, gamma5) -> dict:
    """Largest deviations from the Clifford and chirality relations."""
    eye = np.eye(4)
    anti = 0.0
    for a in range(4):
        for b in range(4):
            ac = gamma[a] @ gamma[b] + gamma[b] @ gamma[a]
            anti = max(anti, float(np.max(np.abs(ac - 2 * METRIC[a, b] * eye))))
    g5_anti = max(
        float(np.max(np.abs(gamma5 @ g + g @ gamma5))) for g in gamma
    )
    g5_sq = float(np.max(np.abs(gamma5 @ gamma5 - eye)))
    return {"anticommutator": anti, "gamma5_anticommutator": g5_anti, "gamma5_square": g5_sq}


@dataclass(frozen=True, eq=False)
class GammaSet:
    """The four gammas and gamma5 of one representation.

    Construction checks every invariant and raises ``CliffordError`` if
    any deviation exceeds ``CLIFFORD_TOL``.
    """

    gamma: tuple
    gamma5: np.ndarray
    rep: str
    transform: Optional[RepTransform] = field(default=None, compare=False)

    def __post_init__(self):
        gs = tuple(cmatrix4(g) for g in self.gamma)
        if len(gs) != 4:
            raise ValueError("need exactly four gamma matrices")
        g5 = cmatrix4(self.gamma5)
        dev = clifford_deviation(gs, g5)
        worst = max(dev.values())
        if worst > C.CLIFFORD_TOL:
            raise CliffordError(f"Clifford invariants broken: {dev}")
        object.__setattr__(self, "gamma", gs)
        object.__setattr__(self, "gamma5", g5)

    def slash(self, e: float, k1: float, k2: float, k3: float) -> np.ndarray:
        """Contraction ``gamma^0 e - gamma^1 k1 - gamma^2 k2 - gamma^3 k3``."""
        g = self.gamma
        return g[0] * e - g[1] * k1 - g[2] * k2 - g[3] * k3

    def deviation(self) -> dict:
        return clifford_deviation(self.gamma, self.gamma5)


def _spinor() -> GammaSet:
    I2, s1, s2, s3 = pauli()
    Z = np.zeros((2, 2), dtype=complex)
    gamma = (_blocks(Z, I2, I2, Z),) + tuple(_blocks(Z, -s, s, Z) for s in (s1, s2, s3))
    return GammaSet(gamma, displays.SPINOR_GAMMA5, "spinor")


def standard_transform() -> RepTransform:
    """Spinor to standard basis; the matrix is its own inverse."""
    I2 = np.eye(2)
    S = _blocks(I2, I2, I2, -I2) / np.sqrt(2)
    return RepTransform(S, S.copy(), name="standard")


def majorana_transform() -> RepTransform:
    """``A = (1 - gamma^2)/sqrt 2`` and ``A^{-1} = (1 + gamma^2)/sqrt 2``."""
    g2 = _spinor().gamma[2]
    eye = np.eye(4)
    return RepTransform((eye - g2) / np.sqrt(2), (eye + g2) / np.sqrt(2), name="majorana")


def identity_transform() -> RepTransform:
    return RepTransform(np.eye(4), np.eye(4), name="identity")


def transform_gammas(t: RepTransform, g: GammaSet, rep: str = "custom") -> GammaSet:
    """Conjugate every matrix of ``g`` by ``t``; invariants are re-checked."""
    composite = t if g.transform is None else g.transform.then(t)
    return GammaSet(
        tuple(t.conjugate(x) for x in g.gamma), t.conjugate(g.gamma5), rep, composite
    )


def build_gammas(rep: str) -> GammaSet:
    """Gamma set of a named representation.

    ``"standard"`` uses the explicit block matrices and is checked
    against the conjugated spinor set. ``"majorana"`` is built by
    conjugation and checked against the printed matrices.
    """
    if rep == "spinor":
        return _spinor()
    if rep == "standard":
        I2, s1, s2, s3 = pauli()
        Z = np.zeros((2, 2), dtype=complex)
        explicit = (_blocks(I2, Z, Z, -I2),) + tuple(_blocks(Z, s, -s, Z) for s in (s1, s2, s3))
        built = transform_gammas(standard_transform(), _spinor(), "standard")
        dev = max(float(np.max(np.abs(a - b))) for a, b in zip(explicit, built.gamma))
        if dev > C.CLIFFORD_TOL:
            raise CliffordError(f"standard gammas disagree with transform by {dev:.3e}")
        return GammaSet(explicit, built.gamma5, "standard", built.transform)
    if rep == "majorana":
        built = transform_gammas(majorana_transform(), _spinor(), "majorana")
        dev = majorana_display_deviation(built)
        if dev > C.DISPLAY_TOL:
            raise CliffordError(f"Majorana gammas disagree with printed matrices by {dev:.3e}")
        return built
    raise ValueError(f"unknown representation {rep!r}; expected one of {REPRESENTATIONS}")


def majorana_display_deviation(g: GammaSet) -> float:
    return max(
        float(np.max(np.abs(a - b))) for a, b in zip(g.gamma, displays.MAJORANA_GAMMAS)
    )


def transform_between(src: str, dst: str) -> RepTransform:
    """Transform taking the ``src`` representation to ``dst``."""
    def from_spinor(rep):
        if rep == "spinor":
            return identity_transform()
        return build_gammas(rep).transform

    return from_spinor(src).inverse().then(from_spinor(dst))


def covariance_check(t: RepTransform, set_src, set_dst, point=C.GENERIC_POINT) -> float:
    """Max deviation of ``S [Psi] S^{-1}`` from ``[phi]`` at a spacetime point.

    The conjugation acts on the whole 4x4 matrix of solutions, since the
    squared set is the operator ``(i gamma d + M)`` applied to a scalar.
    """
    if set_src.mode != set_dst.mode:
        raise ValueError("solution sets have different mode parameters")
    a = set_src.evaluate(point)
    b = set_dst.evaluate(point)
    return float(np.max(np.abs(t.conjugate(a) - b)))


def gamma5_product_relation(g: GammaSet) -> dict:
    """Compare gamma5 with ``i g0 g1 g2 g3``; reports, asserts nothing."""
    prod = 1j * g.gamma[0] @ g.gamma[1] @ g.gamma[2] @ g.gamma[3]
    same = float(np.max(np.abs(prod - g.gamma5)))
    opposite = float(np.max(np.abs(prod + g.gamma5)))
    if same <= C.CLIFFORD_TOL:
        relation = "equal"
    elif opposite <= C.CLIFFORD_TOL:
        relation = "opposite"
    else:
        relation = "unrelated"
    return {"relation": relation, "dev_equal": same, "dev_opposite": opposite}
