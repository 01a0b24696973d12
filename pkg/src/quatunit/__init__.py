"""Exact solver for unit equations a f a' + b g b' = 1 over quaternion semigroups."""

from .quat import Quaternion
from .realalg import AlgebraicComplex, AlgebraicReal, RInterval
from .semigroup import SemigroupSpec, Word

__version__ = "0.1.0"

__all__ = ["AlgebraicComplex", "AlgebraicReal", "Quaternion", "RInterval", "SemigroupSpec", "Word"]
