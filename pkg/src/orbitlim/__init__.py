"""Exact computations with one-parameter-subgroup limits, stabilizer algebras
and their leading-term algebras, over the rationals."""

from .errors import InputError, InvariantViolation, OrbitLimError
from .forms import Conjugation, Form, FormsDerivation, LeftMult
from .grading import OnePS
from .linalg import RatMatrix, Subspace

__version__ = "0.1.0"

__all__ = [
    "Conjugation",
    "Form",
    "FormsDerivation",
    "InputError",
    "InvariantViolation",
    "LeftMult",
    "OnePS",
    "OrbitLimError",
    "RatMatrix",
    "Subspace",
]
