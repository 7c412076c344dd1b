"""Majorana-basis solutions and their real and imaginary families.

In the Majorana basis ``i gamma^a`` is real, so the Dirac operator maps
real functions to real functions. Seeding the squaring method with
``cos th`` gives a real family R; seeding with ``-i sin th`` gives an
imaginary family I.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import constants as C
from . import displays
from .algebra import det4, numerical_rank
from .clifford import build_gammas, majorana_transform
from .solutions import (
    REAL_PHASE,
    ModeParams,
    StructuredSolution,
    dirac_residual,
    helicity_wave,
)

__all__ = [
    "MajoranaFamily",
    "to_majorana",
    "from_majorana",
    "real_imag_split",
    "squared_real_seed",
    "squared_majorana_sets",
    "linear_map_nonexistence",
    "majorana_report",
]


@dataclass(frozen=True, eq=False)
class MajoranaFamily:
    """Four real-phase Majorana solutions of one charge parity."""

    kind: str
    columns: tuple
    mode: ModeParams

    def __post_init__(self):
        if self.kind not in ("real", "imaginary"):
            raise ValueError("kind must be 'real' or 'imaginary'")
        cols = tuple(self.columns)
        if len(cols) != 4 or any(c.form != REAL_PHASE or c.rep != "majorana" for c in cols):
            raise ValueError("need four real-phase Majorana-basis columns")
        object.__setattr__(self, "columns", cols)

    def evaluate(self, point) -> np.ndarray:
        return np.column_stack([c.evaluate(point) for c in self.columns])

    def parity_defect(self) -> float:
        """Largest imaginary (real family) or real (imaginary family) coefficient part."""
        parts = [c.first for c in self.columns] + [c.second for c in self.columns]
        if self.kind == "real":
            return float(max(np.max(np.abs(np.imag(p))) for p in parts))
        return float(max(np.max(np.abs(np.real(p))) for p in parts))

    def to_dict(self) -> dict:
        return {"kind": self.kind, "columns": [c.to_dict() for c in self.columns]}


def to_majorana(sol: StructuredSolution) -> StructuredSolution:
    """``A Psi`` with ``A = (1 - gamma^2)/sqrt 2``."""
    if sol.rep != "spinor":
        raise ValueError("to_majorana expects a spinor-basis solution")
    return sol.mapped(majorana_transform().S, "majorana")


def from_majorana(sol: StructuredSolution) -> StructuredSolution:
    if sol.rep != "majorana":
        raise ValueError("from_majorana expects a Majorana-basis solution")
    return sol.mapped(majorana_transform().S_inv, "spinor")


def real_imag_split(sol: StructuredSolution, conj_sol: StructuredSolution,
                    tol: float = C.IDENTITY_TOL) -> tuple:
    """``R = (Psi + Psi*)/2`` and ``I = (Psi - Psi*)/2`` in real-phase form."""
    a = sol.as_real_phase()
    b = conj_sol.as_real_phase()
    if a.mode != b.mode or a.rep != b.rep:
        raise ValueError("solution and conjugate differ in mode or representation")
    ref = a.conjugate()
    dev = float(max(np.max(np.abs(ref.first - b.first)), np.max(np.abs(ref.second - b.second))))
    if dev > tol * max(1.0, a.max_coeff()):
        raise ValueError(f"second argument is not the conjugate solution (off by {dev:.3e})")
    return (a + b).scaled(0.5), (a - b).scaled(0.5)


def squared_real_seed(m: ModeParams, cos_coeff: complex, sin_coeff: complex) -> tuple:
    """Columns of ``(i gamma_M^a d_a + M)`` applied to ``c cos th + s sin th``.

    With ``d_a th = k_a`` the operator gives ``cos th (M c + i s P) +
    sin th (M s - i c P)``, ``P`` the Majorana-basis slash of the momentum.
    """
    g = build_gammas("majorana")
    P = g.slash(m.epsilon, m.k1, m.k2, m.k)
    eye = np.eye(4)
    cos_mat = m.M * cos_coeff * eye + 1j * sin_coeff * P
    sin_mat = m.M * sin_coeff * eye - 1j * cos_coeff * P
    return tuple(
        StructuredSolution.real_phase(m, "majorana", cos_mat[:, j], sin_mat[:, j]) for j in range(4)
    )


def squared_majorana_sets(m: ModeParams) -> tuple:
    """Real family from ``cos th`` and imaginary family from ``-i sin th``."""
    if m.M <= 0:
        raise ValueError("Majorana families need M > 0")
    R = MajoranaFamily("real", squared_real_seed(m, 1.0, 0.0), m)
    I = MajoranaFamily("imaginary", squared_real_seed(m, 0.0, -1j), m)
    return R, I


def _point_phase(m: ModeParams, point) -> float:
    t, x, y, z = point
    return m.epsilon * t - m.k1 * x - m.k2 * y - m.k * z


def linear_map_nonexistence(R: MajoranaFamily, I: MajoranaFamily, points) -> dict:
    """Compare ``S(x) = I(x) R(x)^{-1}`` at two spacetime points.

    Also evaluates the printed closed form of S at both points.
    """
    if R.mode != I.mode:
        raise ValueError("families belong to different modes")
    m = R.mode
    p1, p2 = points
    out = {}
    mats = []
    for tag, pt in (("x1", p1), ("x2", p2)):
        r = R.evaluate(pt)
        if abs(det4(r)) <= C.SINGULAR_DET:
            raise np.linalg.LinAlgError("real family singular at sampled point")
        S = I.evaluate(pt) @ np.linalg.inv(r)
        th = _point_phase(m, pt)
        shown = displays.majorana_transfer(m, th)
        mats.append(S)
        out[tag] = {
            "phase": th,
            "sin_2phase": float(np.sin(2 * th)),
            "S": S,
            "display_deviation": float(np.max(np.abs(S - shown))),
        }
    out["deviation"] = float(np.max(np.abs(mats[0] - mats[1])))
    return out


def majorana_report(m: ModeParams, points=((0.0, 0.1, 0.2, 0.3), (0.7, -0.4, 0.5, 1.1))) -> dict:
    """Families, determinants, residuals and printed-display deviations."""
    R, I = squared_majorana_sets(m)
    g = build_gammas("majorana")
    dets = {"real": [], "imaginary": []}
    for pt in points:
        dets["real"].append(det4(R.evaluate(pt)))
        dets["imaginary"].append(det4(I.evaluate(pt)))
    th = _point_phase(m, points[0])
    alpha = helicity_wave(m, "alpha", 1)
    wave = to_majorana(alpha).as_real_phase()
    rpart, ipart = real_imag_split(wave, wave.conjugate())
    shown_r = displays.majorana_alpha_real_part(m)
    shown_i = displays.majorana_alpha_imag_part(m)
    shown_a, _ = displays.majorana_helicity_waves(m)
    inverse_image = majorana_transform().S_inv @ alpha.first
    return {
        "mode": m.as_dict(),
        "real": R.to_dict(),
        "imaginary": I.to_dict(),
        "residuals": {
            "real": max(dirac_residual(c, g) for c in R.columns),
            "imaginary": max(dirac_residual(c, g) for c in I.columns),
        },
        "parity_defect": {"real": R.parity_defect(), "imaginary": I.parity_defect()},
        "determinants": dets,
        "rank": {"real": numerical_rank(R.evaluate(points[0])),
                 "imaginary": numerical_rank(I.evaluate(points[0]))},
        "S_two_point": linear_map_nonexistence(R, I, points),
        "printed_display": {
            "real_set": float(np.max(np.abs(R.evaluate(points[0]) - displays.majorana_real_set(m, th)))),
            "imaginary_set": float(np.max(np.abs(I.evaluate(points[0]) - displays.majorana_imag_set(m, th)))),
            "helicity_wave_vs_A_image": float(np.max(np.abs(wave.first - shown_a))),
            "helicity_wave_vs_A_inverse_image": float(np.max(np.abs(inverse_image - shown_a))),
            "alpha_real_part_cos": float(np.max(np.abs(rpart.first - shown_r[0]))),
            "alpha_real_part_sin": float(np.max(np.abs(rpart.second - shown_r[1]))),
            "alpha_imag_part_cos": float(np.max(np.abs(ipart.first - shown_i[0]))),
            "alpha_imag_part_sin": float(np.max(np.abs(ipart.second - shown_i[1]))),
        },
    }
