"""Squared-operator solution bases of the Dirac, Majorana and Weyl equations.

Modules: ``algebra`` (4x4 complex linear algebra and polynomial roots),
``clifford`` (gamma representations), ``solutions`` (solution families),
``basis_maps`` (maps between families), ``majorana`` (real and imaginary
families), ``boundary`` (vanishing-current quantization) and ``cli``.
"""

from .clifford import GammaSet, build_gammas
from .solutions import ModeParams, SolutionSet, StructuredSolution, make_mode

__version__ = "0.1.0"

__all__ = ["GammaSet", "build_gammas", "ModeParams", "SolutionSet", "StructuredSolution", "make_mode"]
