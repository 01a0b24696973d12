"""Certified enclosures of ln, arg, pi and the absolute logarithmic height."""

from fractions import Fraction
from functools import lru_cache

from ..errors import NonPositiveOperand, PrecisionFailure, ZeroOperand
from . import ball, polys
from .numbers import AlgebraicComplex, RInterval, _coerce

MAX_PREC = 1 << 16


def _escalate(bits, compute):
    """Run ``compute(prec)`` with doubling precision until the width target is met."""
    target = Fraction(1, 1 << bits)
    prec = bits + 16
    while prec <= MAX_PREC:
        iv = compute(prec)
        if iv.width <= target:
            return iv
        prec *= 2
    raise PrecisionFailure(f"could not reach 2^-{bits} within {MAX_PREC} bits")


def ln_rational(q, prec):
    lo, hi = ball.ln_fraction(q, prec).bounds()
    return RInterval(lo, hi)


def ln_of_interval(iv, prec):
    """Enclosure of ln over a positive rational interval (ln is monotone)."""
    if iv.lo <= 0:
        raise NonPositiveOperand("ln of an interval reaching zero")
    lo = ball.ln_fraction(iv.lo, prec).bounds()[0]
    hi = ball.ln_fraction(iv.hi, prec).bounds()[1]
    return RInterval(lo, hi)


def pi_interval(prec):
    return RInterval(*ball.pi(prec).bounds())


def ln2_interval(prec):
    return RInterval(*ball.ln2(prec).bounds())


def log_interval(x, bits):
    """Interval of width <= 2^-bits containing ln(x), for algebraic x > 0."""
    x = _coerce(x)
    if x.sign() <= 0:
        raise NonPositiveOperand("log of a nonpositive number")
    if x.is_rational:
        q = x.as_fraction()
        if q == 1:
            return RInterval(0, 0)
        return _escalate(bits, lambda prec: ln_rational(q, prec))
    # width of ln over [lo, hi] is at most (hi - lo) / lo
    base = x.refine(Fraction(1, 4) * _lower_positive(x))

    def compute(prec):
        eps = base.lo / (1 << (prec - 8))
        return ln_of_interval(x.refine(eps), prec)

    return _escalate(bits, compute)


def _lower_positive(x):
    """A positive rational lower bound for x > 0."""
    e = 0
    while True:
        k = x.floor_scaled(e)
        if k >= 1:
            return Fraction(k, 1 << e)
        e += 1


def _corner_arg(X, Y, prec):
    """Ball-based enclosure of the argument of the point (X, Y), in [0, 2pi)."""
    P = ball.pi(prec)
    if X > 0 and Y > 0:
        b = ball.atan_fraction(Y / X, prec)
    elif X < 0 and Y > 0:
        b = P - ball.atan_fraction(Y / -X, prec)
    elif X < 0 and Y < 0:
        b = P + ball.atan_fraction(Y / X, prec)
    else:
        b = P * 2 - ball.atan_fraction(-Y / X, prec)
    return RInterval(*b.bounds())


def arg_interval(z, bits):
    """Interval of width <= 2^-bits containing the argument of z, normalised to [0, 2pi)."""
    if not isinstance(z, AlgebraicComplex):
        z = AlgebraicComplex(z, 0)
    if z.is_zero():
        raise ZeroOperand("argument of zero")
    sx, sy = z.re.sign(), z.im.sign()
    if sy == 0:
        if sx > 0:
            return RInterval(0, 0)
        return _escalate(bits, pi_interval)
    if sx == 0:
        if sy > 0:
            return _escalate(bits, lambda prec: pi_interval(prec + 1) * Fraction(1, 2))
        return _escalate(bits, lambda prec: pi_interval(prec + 2) * Fraction(3, 2))
    # a box in an open quadrant: the extreme arguments sit at its corners
    scale_lo = min(_lower_positive(abs(z.re)), _lower_positive(abs(z.im)))

    def compute(prec):
        eps = scale_lo / (1 << (prec - 4))
        bx, by = z.re.refine(eps), z.im.refine(eps)
        corners = [_corner_arg(X, Y, prec) for X in (bx.lo, bx.hi) for Y in (by.lo, by.hi)]
        return RInterval(min(c.lo for c in corners), max(c.hi for c in corners))

    return _escalate(bits, compute)


def _modulus_sq_range(xr, yr):
    """Range of x^2 + y^2 over a rational box."""
    def sq_range(lo, hi):
        if lo <= 0 <= hi:
            return Fraction(0), max(lo * lo, hi * hi)
        return min(lo * lo, hi * hi), max(lo * lo, hi * hi)

    a = sq_range(*xr)
    b = sq_range(*yr)
    return a[0] + b[0], a[1] + b[1]


def weil_height(alpha, bits=32):
    """Enclosure of the absolute logarithmic height of a nonzero algebraic number.

    Uses the Mahler-measure form h = (ln|lead| + sum ln max(1, |root|)) / degree,
    with every complex root of the minimal polynomial isolated in a rational box.
    """
    if isinstance(alpha, AlgebraicComplex):
        if alpha.is_zero():
            raise ZeroOperand("height of zero")
        poly = alpha.minpoly()
    else:
        alpha = _coerce(alpha)
        if alpha.is_zero():
            raise ZeroOperand("height of zero")
        if alpha.is_rational:
            q = alpha.as_fraction()
            m = max(abs(q.numerator), q.denominator)
            if m == 1:
                return RInterval(0, 0)
            return _escalate(bits, lambda prec: ln_rational(Fraction(m), prec))
        poly = alpha.minpoly
    return _height_of_minpoly(poly, bits)


@lru_cache(maxsize=1024)
def _height_of_minpoly(poly, bits):
    d = len(poly) - 1
    lead = abs(poly[-1])

    def compute(prec):
        eps = Fraction(1, 1 << (prec - 12))
        total = ln_rational(Fraction(lead), prec) if lead != 1 else RInterval(0, 0)
        for xr, yr in polys.complex_root_boxes(poly, eps):
            lo2, hi2 = _modulus_sq_range(xr, yr)
            lo2, hi2 = max(lo2, Fraction(1)), max(hi2, Fraction(1))
            lo = Fraction(0) if lo2 == 1 else ball.ln_fraction(lo2, prec).bounds()[0]
            hi = Fraction(0) if hi2 == 1 else ball.ln_fraction(hi2, prec).bounds()[1]
            total = total + RInterval(max(lo, Fraction(0)), hi) * Fraction(1, 2)
        return total * Fraction(1, d)

    return _escalate(bits, compute)
