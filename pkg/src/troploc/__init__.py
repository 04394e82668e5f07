"""Max-plus linear algebra and Chebyshev minimax facility location."""

from .errors import TropicalError
from .estimator import ChebyshevCenter, MaxPlusSpectrum
from .linalg import TropMatrix, TropVector
from .location import (
    LocationInstance,
    SolutionFamily,
    SolveReport,
    objective,
    sample_family,
    solve,
    solve_constrained,
    solve_unconstrained,
)
from .semiring import ONE, ZERO, TropScalar, trop
from .spectral import eigenbasis, eigenvalue, minimize_phi, phi

__version__ = "0.1.0"

__all__ = [
    "ChebyshevCenter",
    "LocationInstance",
    "MaxPlusSpectrum",
    "ONE",
    "SolutionFamily",
    "SolveReport",
    "TropMatrix",
    "TropScalar",
    "TropVector",
    "TropicalError",
    "ZERO",
    "eigenbasis",
    "eigenvalue",
    "minimize_phi",
    "objective",
    "phi",
    "sample_family",
    "solve",
    "solve_constrained",
    "solve_unconstrained",
    "trop",
]
