"""Exact real algebraic numbers and certified transcendental enclosures."""

from fractions import Fraction

from ..errors import DivisionByZero
from .numbers import AlgebraicComplex, AlgebraicReal, RInterval, sqrt_bounds
from .transcend import arg_interval, ln_of_interval, log_interval, pi_interval, weil_height

Rat = Fraction

_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def ar_arith(op, x, y):
    x, y = AlgebraicReal(x), AlgebraicReal(y)
    if op == "div" and y.is_zero():
        raise DivisionByZero("division by zero")
    return _OPS[op](x, y)


def ar_sqrt(x):
    return AlgebraicReal(x).sqrt()


def ar_compare(x, y):
    """'LT', 'EQ' or 'GT'."""
    return ("LT", "EQ", "GT")[AlgebraicReal(x).compare(y) + 1]


def refine(x, eps):
    return AlgebraicReal(x).refine(eps)


__all__ = [
    "AlgebraicComplex",
    "AlgebraicReal",
    "RInterval",
    "Rat",
    "ar_arith",
    "ar_compare",
    "ar_sqrt",
    "arg_interval",
    "ln_of_interval",
    "log_interval",
    "pi_interval",
    "refine",
    "sqrt_bounds",
    "weil_height",
]
