"""Closed-form solution families of the Dirac and Weyl equations.

Solutions are stored as coefficient spinors attached to known scalar
functions, so derivatives are exact multipliers and every identity
between families reduces to finite-dimensional linear algebra.

Two structural forms are used:

* ``transverse_z``:  ``e^{i(-e t + k1 x + k2 y)} (plus e^{ikz} + minus e^{-ikz})``
* ``real_phase``:    ``cos_part cos(th) + sin_part sin(th)``, ``th = e t - k1 x - k2 y - k z``
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import constants as C
from .clifford import GammaSet, build_gammas, pauli
from .algebra import numerical_rank, det4

__all__ = [
    "ModeParams",
    "HelicityData",
    "StructuredSolution",
    "SolutionSet",
    "WeylSpinor",
    "make_mode",
    "helicity_data",
    "helicity_wave",
    "phi_basis",
    "squared_set",
    "primed_set",
    "u_sets",
    "w_sets",
    "combine_sets",
    "dirac_residual",
    "fd_dirac_operator",
    "helicity_eigenvalue",
    "weyl_waves",
    "set_rank",
    "set_det",
]

TRANSVERSE_Z = "transverse_z"
REAL_PHASE = "real_phase"


def _gammas(rep_or_set: Union[str, GammaSet]) -> GammaSet:
    return rep_or_set if isinstance(rep_or_set, GammaSet) else build_gammas(rep_or_set)


def _vec(v) -> np.ndarray:
    a = np.array(v, dtype=complex).reshape(4)
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite spinor coefficient")
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ModeParams:
    """Kinematics of one positive-energy mode."""

    k1: float
    k2: float
    k: float
    M: float
    epsilon: float
    p: float

    @property
    def f(self) -> complex:
        return complex(self.k1, self.k2)

    @property
    def g(self) -> complex:
        return complex(self.k1, -self.k2)

    def as_dict(self) -> dict:
        return {"k1": self.k1, "k2": self.k2, "k": self.k, "M": self.M,
                "epsilon": self.epsilon, "p": self.p}


def make_mode(k1: float, k2: float, k: float, M: float) -> ModeParams:
    """Build a mode on the positive-energy shell.

    Examples
    --------
    >>> m = make_mode(0.3, 0.4, 1.2, 1.0)
    >>> round(m.epsilon ** 2, 12), round(m.p, 12)
    (2.69, 1.3)
    """
    vals = [float(v) for v in (k1, k2, k, M)]
    if not all(math.isfinite(v) for v in vals):
        raise ValueError("mode parameters must be finite")
    k1, k2, k, M = vals
    if M < 0:
        raise ValueError("mass must be non-negative")
    if k1 == k2 == k == M == 0:
        raise ValueError("all-zero momentum and mass: no mode")
    p = math.sqrt(k1 * k1 + k2 * k2 + k * k)
    eps = math.sqrt(p * p + M * M)
    return ModeParams(k1, k2, k, M, eps, p)


@dataclass(frozen=True)
class HelicityData:
    """Helicity amplitudes; ``t`` (or ``s``) is None when it is 0/0."""

    alpha: float
    beta: float
    s: Optional[complex]
    t: Optional[complex]


def _ratio(num: complex, den: float) -> Optional[complex]:
    if den != 0:
        return num / den
    if num == 0:
        return None
    raise ValueError("helicity ratio has a vanishing denominator")


def helicity_data(m: ModeParams) -> HelicityData:
    """alpha = (e - p)/M, beta = (e + p)/M, s = f/(k + p), t = f/(k - p)."""
    if m.M <= 0:
        raise ValueError("helicity amplitudes need M > 0")
    return HelicityData(
        (m.epsilon - m.p) / m.M,
        (m.epsilon + m.p) / m.M,
        _ratio(m.f, m.k + m.p),
        _ratio(m.f, m.k - m.p),
    )


@dataclass(frozen=True, eq=False)
class StructuredSolution:
    """A solution as two coefficient spinors on known scalar functions."""

    mode: ModeParams
    rep: str
    form: str
    first: np.ndarray
    second: np.ndarray

    def __post_init__(self):
        if self.form not in (TRANSVERSE_Z, REAL_PHASE):
            raise ValueError(f"unknown form {self.form!r}")
        object.__setattr__(self, "first", _vec(self.first))
        object.__setattr__(self, "second", _vec(self.second))

    @classmethod
    def transverse(cls, mode, rep, plus, minus) -> "StructuredSolution":
        return cls(mode, rep, TRANSVERSE_Z, plus, minus)

    @classmethod
    def real_phase(cls, mode, rep, cos_part, sin_part) -> "StructuredSolution":
        return cls(mode, rep, REAL_PHASE, cos_part, sin_part)

    def _need(self, form):
        if self.form != form:
            raise AttributeError(f"solution is in {self.form} form")

    @property
    def plus(self) -> np.ndarray:
        self._need(TRANSVERSE_Z)
        return self.first

    @property
    def minus(self) -> np.ndarray:
        self._need(TRANSVERSE_Z)
        return self.second

    @property
    def cos_part(self) -> np.ndarray:
        self._need(REAL_PHASE)
        return self.first

    @property
    def sin_part(self) -> np.ndarray:
        self._need(REAL_PHASE)
        return self.second

    def phase(self, point) -> float:
        """Real phase ``e t - k1 x - k2 y - k z`` at a spacetime point."""
        t, x, y, z = point
        m = self.mode
        return m.epsilon * t - m.k1 * x - m.k2 * y - m.k * z

    def evaluate(self, point) -> np.ndarray:
        t, x, y, z = (float(c) for c in point)
        m = self.mode
        if self.form == TRANSVERSE_Z:
            tr = np.exp(1j * (-m.epsilon * t + m.k1 * x + m.k2 * y))
            return tr * (self.first * np.exp(1j * m.k * z) + self.second * np.exp(-1j * m.k * z))
        th = self.phase((t, x, y, z))
        return self.first * math.cos(th) + self.second * math.sin(th)

    def _compatible(self, other: "StructuredSolution"):
        if (self.mode, self.rep, self.form) != (other.mode, other.rep, other.form):
            raise ValueError("solutions differ in mode, representation or form")

    def __add__(self, other: "StructuredSolution") -> "StructuredSolution":
        self._compatible(other)
        return StructuredSolution(self.mode, self.rep, self.form,
                                  self.first + other.first, self.second + other.second)

    def __sub__(self, other: "StructuredSolution") -> "StructuredSolution":
        return self + other.scaled(-1)

    def scaled(self, c: complex) -> "StructuredSolution":
        return StructuredSolution(self.mode, self.rep, self.form, c * self.first, c * self.second)

    def mapped(self, matrix, rep: str) -> "StructuredSolution":
        """Apply a constant 4x4 matrix to both coefficient spinors."""
        a = np.asarray(matrix)
        return StructuredSolution(self.mode, rep, self.form, a @ self.first, a @ self.second)

    def conjugate(self) -> "StructuredSolution":
        """Pointwise complex conjugate; only the real-phase form is closed under it."""
        self._need(REAL_PHASE)
        return StructuredSolution(self.mode, self.rep, REAL_PHASE,
                                  np.conj(self.first), np.conj(self.second))

    def as_real_phase(self) -> "StructuredSolution":
        """Rewrite an ``e^{ikz}``-only solution as ``C cos th + S sin th``.

        ``v e^{-i th} = v cos th - i v sin th``. Solutions with a nonzero
        ``e^{-ikz}`` part have a different phase and cannot be rewritten.
        """
        if self.form == REAL_PHASE:
            return self
        if np.any(self.second != 0):
            raise ValueError("only e^{ikz} solutions have a real-phase form")
        return StructuredSolution(self.mode, self.rep, REAL_PHASE, self.first, -1j * self.first)

    def max_coeff(self) -> float:
        return float(max(np.max(np.abs(self.first)), np.max(np.abs(self.second))))

    def to_dict(self) -> dict:
        names = ("plus", "minus") if self.form == TRANSVERSE_Z else ("cos", "sin")
        return {"form": self.form, names[0]: self.first, names[1]: self.second}


@dataclass(frozen=True, eq=False)
class SolutionSet:
    """Four solutions sharing mode and representation, with provenance."""

    columns: tuple
    generator: str
    phase_gamma: Optional[float] = None

    def __post_init__(self):
        cols = tuple(self.columns)
        if len(cols) != 4:
            raise ValueError("a solution set has exactly four columns")
        first = cols[0]
        for c in cols[1:]:
            if c.mode != first.mode or c.rep != first.rep:
                raise ValueError("columns must share mode and representation")
        object.__setattr__(self, "columns", cols)

    @property
    def mode(self) -> ModeParams:
        return self.columns[0].mode

    @property
    def rep(self) -> str:
        return self.columns[0].rep

    def evaluate(self, point=C.GENERIC_POINT) -> np.ndarray:
        return np.column_stack([c.evaluate(point) for c in self.columns])

    def first_matrix(self) -> np.ndarray:
        return np.column_stack([c.first for c in self.columns])

    def second_matrix(self) -> np.ndarray:
        return np.column_stack([c.second for c in self.columns])

    def mapped(self, matrix, rep: str) -> "SolutionSet":
        return SolutionSet(tuple(c.mapped(matrix, rep) for c in self.columns),
                           self.generator, self.phase_gamma)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.as_dict(),
            "rep": self.rep,
            "generator": self.generator,
            "phase_gamma": self.phase_gamma,
            "columns": [c.to_dict() for c in self.columns],
        }


def set_rank(s: SolutionSet, point=C.GENERIC_POINT, tau: float = C.RANK_TAU) -> int:
    return numerical_rank(s.evaluate(point), tau)


def set_det(s: SolutionSet, point=C.GENERIC_POINT) -> complex:
    return det4(s.evaluate(point))


def _dirac_ops(m: ModeParams, g: GammaSet):
    eye = np.eye(4)
    plus = g.slash(m.epsilon, m.k1, m.k2, m.k)
    minus = g.slash(m.epsilon, m.k1, m.k2, -m.k)
    return plus, minus, eye


def helicity_wave(m: ModeParams, kind: str, sign: int = 1) -> StructuredSolution:
    """One spinor-basis helicity plane wave with ``k3 = sign * k``.

    Amplitude ``(1, r, x, x r)`` with ``x = alpha`` and ``r = f/(k3 + p)``
    for ``kind="alpha"``, ``x = beta`` and ``r = f/(k3 - p)`` for ``"beta"``.
    """
    h = helicity_data(m)
    if kind not in ("alpha", "beta") or sign not in (1, -1):
        raise ValueError("kind must be alpha or beta and sign +-1")
    k3 = sign * m.k
    x = h.alpha if kind == "alpha" else h.beta
    r = _ratio(m.f, k3 + m.p if kind == "alpha" else k3 - m.p)
    if r is None:
        raise ValueError("helicity wave undefined: 0/0 component ratio")
    amp = np.array([1, r, x, x * r], dtype=complex)
    z = np.zeros(4)
    if sign == 1:
        return StructuredSolution.transverse(m, "spinor", amp, z)
    return StructuredSolution.transverse(m, "spinor", z, amp)


def phi_basis(m: ModeParams) -> SolutionSet:
    """Spinor-basis helicity plane waves (Phi_1, Phi_2, Phi_3, Phi_4).

    Phi_1 and Phi_3 are the alpha and beta waves with ``e^{ikz}``;
    Phi_2 and Phi_4 are the same with ``e^{-ikz}``.
    """
    cols = (
        helicity_wave(m, "alpha", 1),
        helicity_wave(m, "alpha", -1),
        helicity_wave(m, "beta", 1),
        helicity_wave(m, "beta", -1),
    )
    return SolutionSet(cols, "helicity")


def squared_set(m: ModeParams, rep: Union[str, GammaSet] = "spinor", gamma: float = 0.0) -> SolutionSet:
    """Columns of ``(i gamma^a d_a + M)`` applied to ``sin(kz + gamma)`` times the transverse phase.

    ``sin(kz + g) = (e^{ig} e^{ikz} - e^{-ig} e^{-ikz}) / 2i`` and each
    exponential turns the operator into ``pslash(+-k) + M``.
    """
    gs = _gammas(rep)
    sp, sm, eye = _dirac_ops(m, gs)
    dp, dm = sp + m.M * eye, sm + m.M * eye
    cp = np.exp(1j * gamma) / 2j
    cm = -np.exp(-1j * gamma) / 2j
    cols = tuple(
        StructuredSolution.transverse(m, gs.rep, cp * dp[:, j], cm * dm[:, j]) for j in range(4)
    )
    return SolutionSet(cols, "squared_sin", float(gamma))


def primed_set(m: ModeParams, rep: Union[str, GammaSet] = "spinor") -> SolutionSet:
    """Squared set from the seed ``sin(kz - pi/2) = -cos kz``."""
    s = squared_set(m, rep, -math.pi / 2)
    return SolutionSet(s.columns, "squared_primed", s.phase_gamma)


def u_sets(m: ModeParams, rep: Union[str, GammaSet] = "spinor") -> tuple:
    """Squared plane waves U (from ``e^{ikz}``) and U' (from ``e^{-ikz}``)."""
    gs = _gammas(rep)
    sp, sm, eye = _dirac_ops(m, gs)
    dp, dm = sp + m.M * eye, sm + m.M * eye
    z = np.zeros(4)
    U = SolutionSet(tuple(StructuredSolution.transverse(m, gs.rep, dp[:, j], z) for j in range(4)),
                    "plane_wave")
    Up = SolutionSet(tuple(StructuredSolution.transverse(m, gs.rep, z, dm[:, j]) for j in range(4)),
                     "plane_wave_reflected")
    return U, Up


def w_sets(m: ModeParams) -> tuple:
    """Standard-basis squared sets W (seed sin kz) and W' (seed -cos kz)."""
    W = squared_set(m, "standard", 0.0)
    Wp = primed_set(m, "standard")
    return (SolutionSet(W.columns, "standard_sin", 0.0),
            SolutionSet(Wp.columns, "standard_primed", Wp.phase_gamma))


def combine_sets(a: SolutionSet, b: SolutionSet, coeffs: Sequence[complex]) -> SolutionSet:
    """Columnwise ``c0 * a_j + c1 * b_j``."""
    c0, c1 = coeffs
    if a.mode != b.mode or a.rep != b.rep:
        raise ValueError("sets differ in mode or representation")
    cols = tuple(x.scaled(c0) + y.scaled(c1) for x, y in zip(a.columns, b.columns))
    return SolutionSet(cols, f"combination({a.generator},{b.generator})")


def dirac_residual(sol: StructuredSolution, g: Union[str, GammaSet, None] = None) -> float:
    """Largest coefficient of ``(i gamma^a d_a - M) Psi``, computed structurally."""
    gs = _gammas(g if g is not None else sol.rep)
    if gs.rep != sol.rep:
        raise ValueError(f"solution is in {sol.rep!r}, gammas are {gs.rep!r}")
    m = sol.mode
    eye = np.eye(4)
    if sol.form == TRANSVERSE_Z:
        sp, sm, _ = _dirac_ops(m, gs)
        if m.k == 0:
            r = (sp - m.M * eye) @ (sol.first + sol.second)
            return float(np.max(np.abs(r)))
        rp = (sp - m.M * eye) @ sol.first
        rm = (sm - m.M * eye) @ sol.second
        return float(max(np.max(np.abs(rp)), np.max(np.abs(rm))))
    P = gs.slash(m.epsilon, m.k1, m.k2, m.k)
    c, s = sol.first, sol.second
    rc = 1j * P @ s - m.M * c
    rs = -1j * P @ c - m.M * s
    return float(max(np.max(np.abs(rc)), np.max(np.abs(rs))))


def fd_dirac_operator(sol, g: GammaSet, point, h: float = C.FD_STEP) -> np.ndarray:
    """``(i gamma^a d_a - M) Psi`` at a point by central differences.

    Uses only ``sol.evaluate``; independent of the structural shortcut.
    """
    p = np.array(point, dtype=float)
    out = -sol.mode.M * sol.evaluate(p)
    for a in range(4):
        e = np.zeros(4)
        e[a] = h
        d = (sol.evaluate(p + e) - sol.evaluate(p - e)) / (2 * h)
        out = out + 1j * g.gamma[a] @ d
    return out


def helicity_eigenvalue(sol: StructuredSolution) -> tuple:
    """Eigenvalue and residual of ``diag(sigma.k, sigma.k)`` on a single plane wave."""
    if sol.form != TRANSVERSE_Z:
        raise ValueError("helicity is defined for plane-wave form")
    m = sol.mode
    has_plus = bool(np.any(sol.first != 0))
    has_minus = bool(np.any(sol.second != 0))
    if has_plus == has_minus:
        raise ValueError("need a single plane wave (one of plus/minus zero)")
    k3, v = (m.k, sol.first) if has_plus else (-m.k, sol.second)
    _, s1, s2, s3 = pauli()
    sk = m.k1 * s1 + m.k2 * s2 + k3 * s3
    Sig = np.block([[sk, np.zeros((2, 2))], [np.zeros((2, 2)), sk]])
    w = Sig @ v
    lam = complex(np.vdot(v, w) / np.vdot(v, v))
    return lam, float(np.max(np.abs(w - lam * v)))


@dataclass(frozen=True, eq=False)
class WeylSpinor:
    """Massless two-spinor plane wave ``e^{-i e t + i k1 x + i k2 y + i sign k z} eta``."""

    mode: ModeParams
    sign: int
    components: np.ndarray

    def __post_init__(self):
        if self.mode.M != 0:
            raise ValueError("Weyl spinors are massless")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        c = np.array(self.components, dtype=complex).reshape(2)
        c.setflags(write=False)
        object.__setattr__(self, "components", c)

    @property
    def k3(self) -> float:
        return self.sign * self.mode.k

    def evaluate(self, point) -> np.ndarray:
        t, x, y, z = point
        m = self.mode
        return np.exp(1j * (-m.epsilon * t + m.k1 * x + m.k2 * y + self.k3 * z)) * self.components

    def operator_matrix(self) -> np.ndarray:
        """Symbol of ``i d_t - i sigma^j d_j`` on this wave: ``e + sigma.k``."""
        _, s1, s2, s3 = pauli()
        m = self.mode
        return m.epsilon * np.eye(2) + m.k1 * s1 + m.k2 * s2 + self.k3 * s3

    def residual(self) -> float:
        return float(np.max(np.abs(self.operator_matrix() @ self.components)))

    def helicity(self) -> tuple:
        """Eigenvalue of ``sigma.k`` and its residual."""
        _, s1, s2, s3 = pauli()
        m = self.mode
        sk = m.k1 * s1 + m.k2 * s2 + self.k3 * s3
        v = self.components
        w = sk @ v
        lam = complex(np.vdot(v, w) / np.vdot(v, v))
        return lam, float(np.max(np.abs(w - lam * v)))

    def to_dict(self) -> dict:
        return {"sign": self.sign, "components": self.components}


def fd_weyl_operator(w: WeylSpinor, point, h: float = C.FD_STEP) -> np.ndarray:
    """``(i d_t - i sigma^j d_j) eta`` by central differences."""
    sig = pauli()
    p = np.array(point, dtype=float)
    out = np.zeros(2, dtype=complex)
    for a in range(4):
        e = np.zeros(4)
        e[a] = h
        d = (w.evaluate(p + e) - w.evaluate(p - e)) / (2 * h)
        out = out + (1j * d if a == 0 else -1j * sig[a] @ d)
    return out


def weyl_waves(k1: float, k2: float, k: float) -> tuple:
    """The two massless waves ``eta`` (``+k``) and ``eta'`` (``-k``)."""
    m = make_mode(k1, k2, k, 0.0)
    f = m.f
    out = []
    for sign in (1, -1):
        den = m.epsilon - sign * m.k
        if den == 0:
            if f == 0:
                raise ValueError("Weyl component ratio is 0/0 (k1 = k2 = 0)")
            raise ValueError("Weyl component ratio has a vanishing denominator")
        out.append(WeylSpinor(m, sign, np.array([1.0, -f / den])))
    return tuple(out)
