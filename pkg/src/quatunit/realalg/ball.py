"""Fixed-point ball arithmetic with rigorous error radii.

A ``Ball(mid, rad, prec)`` encloses every real in ``[(mid - rad) / 2**prec,
(mid + rad) / 2**prec]``.  Every operation widens the radius by an upper bound on
its own rounding error, so enclosures are never lost.  Series evaluations add
an explicit tail bound.  Only what the transcendental kernels need is here.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt


def _ceil_div(a, b):
    return -((-a) // b)


@dataclass(frozen=True)
class Ball:
    mid: int
    rad: int
    prec: int

    @classmethod
    def exact(cls, q, prec):
        q = Fraction(q)
        num = q.numerator << prec
        mid, rem = divmod(num, q.denominator)
        return cls(mid, 0 if rem == 0 else 1, prec)

    @classmethod
    def from_int(cls, n, prec):
        return cls(n << prec, 0, prec)

    def bounds(self):
        s = 1 << self.prec
        return Fraction(self.mid - self.rad, s), Fraction(self.mid + self.rad, s)

    def __add__(self, other):
        return Ball(self.mid + other.mid, self.rad + other.rad, self.prec)

    def __sub__(self, other):
        return Ball(self.mid - other.mid, self.rad + other.rad, self.prec)

    def __neg__(self):
        return Ball(-self.mid, self.rad, self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            return Ball(self.mid * other, self.rad * abs(other), self.prec)
        p = self.prec
        m = self.mid * other.mid
        err = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return Ball(m >> p, _ceil_div(err, 1 << p) + 1, p)

    __rmul__ = __mul__

    def div_int(self, n):
        q = self.mid // n
        if n < 0:
            n = -n
        return Ball(q, _ceil_div(self.rad, n) + 1, self.prec)

    def __truediv__(self, other):
        if isinstance(other, int):
            return self.div_int(other)
        m2, r2 = other.mid, other.rad
        if abs(m2) <= r2:
            raise ZeroDivisionError("ball division by a ball containing zero")
        p = self.prec
        q = (self.mid << p) // m2
        num = (self.rad * abs(m2) + abs(self.mid) * r2) << p
        den = (abs(m2) - r2) * abs(m2)
        return Ball(q, _ceil_div(num, den) + 1, p)

    def sqrt(self):
        p = self.prec
        if self.mid - self.rad <= 0:
            raise ValueError("sqrt of a ball not strictly positive")
        root = isqrt(self.mid << p)
        s = 1 << p
        # |sqrt(x) - sqrt(X)| <= R / sqrt(X - R), in ulps r*S / sqrt(S*(m - r))
        den = isqrt(s * (self.mid - self.rad))
        err = _ceil_div(self.rad * s, max(den, 1)) + 2
        return Ball(root, err, p)

    def upper_abs(self):
        return Fraction(abs(self.mid) + self.rad, 1 << self.prec)


def _series_terms_needed(zmax, prec):
    # smallest n with zmax^(2n+1) <= 2^-(prec+2)
    n = 0
    target = Fraction(1, 1 << (prec + 2))
    pw = zmax
    z2 = zmax * zmax
    while pw > target:
        pw *= z2
        n += 1
    return n, pw


def atanh_ball(z, zmax):
    """atanh of the enclosed value, assuming its magnitude is at most ``zmax`` < 1."""
    p = z.prec
    n, tail = _series_terms_needed(zmax, p)
    z2 = z * z
    power = z
    acc = z
    for k in range(1, n + 1):
        power = power * z2
        acc = acc + power.div_int(2 * k + 1)
    tail_bound = tail / (1 - zmax * zmax)
    extra = _ceil_div(tail_bound.numerator << p, tail_bound.denominator) + 1
    return Ball(acc.mid, acc.rad + extra, p)


def atan_ball(z, zmax):
    """atan of the enclosed value, assuming its magnitude is at most ``zmax`` < 1."""
    p = z.prec
    n, tail = _series_terms_needed(zmax, p)
    z2 = z * z
    power = z
    acc = z
    for k in range(1, n + 1):
        power = power * z2
        term = power.div_int(2 * k + 1)
        acc = acc - term if k % 2 else acc + term
    extra = _ceil_div(tail.numerator << p, tail.denominator) + 1
    return Ball(acc.mid, acc.rad + extra, p)


@lru_cache(maxsize=64)
def ln2(prec):
    w = prec + 16
    b = atanh_ball(Ball.exact(Fraction(1, 3), w), Fraction(1, 3)) * 2
    return _narrow(b, prec)


@lru_cache(maxsize=64)
def pi(prec):
    w = prec + 16
    a = atan_ball(Ball.exact(Fraction(1, 5), w), Fraction(1, 5))
    b = atan_ball(Ball.exact(Fraction(1, 239), w), Fraction(1, 239))
    return _narrow(a * 16 - b * 4, prec)


def _narrow(b, prec):
    """Re-express a ball at a lower precision, rounding the radius outward."""
    shift = b.prec - prec
    if shift <= 0:
        return b
    mid = b.mid >> shift
    rad = _ceil_div(b.rad, 1 << shift) + 1
    return Ball(mid, rad, prec)


def _widen(b, prec):
    shift = prec - b.prec
    if shift <= 0:
        return _narrow(b, prec)
    return Ball(b.mid << shift, b.rad << shift, prec)


def ln_fraction(q, prec):
    """Ball enclosing ln(q) for rational q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("ln of a nonpositive number")
    if q == 1:
        return Ball(0, 0, prec)
    k = q.numerator.bit_length() - q.denominator.bit_length()
    r = q / (Fraction(2) ** k)
    while r > Fraction(4, 3):
        r /= 2
        k += 1
    while r < Fraction(2, 3):
        r *= 2
        k -= 1
    w = prec + 16 + abs(k).bit_length()
    z = (r - 1) / (r + 1)
    acc = atanh_ball(Ball.exact(z, w), Fraction(1, 5)) * 2
    if k:
        acc = acc + _widen(ln2(w), w) * k
    return _narrow(acc, prec)


def atan_fraction(q, prec):
    """Ball enclosing atan(q) for rational q."""
    q = Fraction(q)
    if q == 0:
        return Ball(0, 0, prec)
    if q < 0:
        return -atan_fraction(-q, prec)
    w = prec + 20
    if q > 1:
        half_pi = Ball(pi(w).mid, pi(w).rad, w).div_int(2)
        inner = atan_fraction(1 / q, w)
        return _narrow(half_pi - inner, prec)
    if q <= Fraction(1, 4):
        return _narrow(atan_ball(Ball.exact(q, w), q), prec)
    # two argument halvings t -> t / (1 + sqrt(1 + t^2)) bring t <= tan(pi/16) < 1/4
    t = Ball.exact(q, w)
    one = Ball.from_int(1, w)
    for _ in range(2):
        t = t / (one + (one + t * t).sqrt())
    return _narrow(atan_ball(t, Fraction(1, 4)) * 4, prec)
