"""Exact real and complex algebraic numbers.

Rationals are kept as ``Fraction`` and take a fast path through every
operation.  Irrationals carry their primitive integer minimal polynomial and a
rational isolating interval; sums and products of two irrationals go through a
resultant, then the factor holding the true value is picked out by shrinking an
interval enclosure until exactly one candidate root remains.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..errors import DivisionByZero, InvalidInput, NegativeOperand
from . import polys

_MAX_BISECT = 100_000


@dataclass(frozen=True)
class RInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, q):
        return cls(q, q)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def contains(self, q):
        return self.lo <= q <= self.hi

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def intersects(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other):
        other = _as_interval(other)
        return RInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __mul__(self, other):
        other = _as_interval(other)
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_interval(other)
        if other.contains_zero():
            raise DivisionByZero("interval divisor contains zero")
        return self * RInterval(1 / other.hi, 1 / other.lo)

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RInterval(0, max(-self.lo, self.hi))

    def square(self):
        a = abs(self)
        return RInterval(a.lo * a.lo, a.hi * a.hi)

    def hull(self, other):
        return RInterval(min(self.lo, other.lo), max(self.hi, other.hi))


def _as_interval(x):
    if isinstance(x, RInterval):
        return x
    return RInterval.point(Fraction(x))


def sqrt_bounds(q, bits=64):
    """Rational lower/upper bounds on sqrt(q) for rational q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise NegativeOperand("sqrt of a negative rational")
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        r = Fraction(rn, rd)
        return r, r
    s = 1 << bits
    # sqrt(n/d) = sqrt(n*d)/d
    lo = Fraction(isqrt(n * d * s * s), d * s)
    hi = lo + Fraction(1, d * s)
    return lo, hi


class AlgebraicReal:
    """An exact real algebraic number.

    Instances are immutable as values.  The isolating interval of an
    irrational is a refinement cache that only ever narrows.
    """

    __slots__ = ("_q", "_poly", "_iv")

    def __init__(self, value=0):
        if isinstance(value, AlgebraicReal):
            self._q, self._poly, self._iv = value._q, value._poly, value._iv
            return
        if isinstance(value, str):
            value = Fraction(value)
        if not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot build AlgebraicReal from {type(value).__name__}")
        self._q = Fraction(value)
        self._poly = None
        self._iv = None

    @classmethod
    def _make_irrational(cls, poly, lo, hi):
        obj = cls.__new__(cls)
        obj._q = None
        obj._poly = poly
        obj._iv = (Fraction(lo), Fraction(hi))
        return obj

    @classmethod
    def from_root(cls, poly, lo, hi):
        """The unique real root of ``poly`` in ``[lo, hi]``.

        ``poly`` need not be irreducible; the interval must isolate exactly one
        distinct real root.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise InvalidInput("isolating interval has lo > hi")
        poly = polys.trim(tuple(int(c) for c in poly))
        if len(poly) < 2:
            raise InvalidInput("minpoly must have degree >= 1")
        hits = []
        for f in polys.irreducible_factors(poly):
            n = polys.count_roots(f, lo, hi)
            if n:
                hits.append((f, n))
        if sum(n for _, n in hits) != 1:
            raise InvalidInput("interval does not isolate exactly one real root")
        f = hits[0][0]
        return cls._from_factor(f, lo, hi)

    @classmethod
    def _from_factor(cls, f, lo, hi):
        if len(f) == 2:
            return cls(Fraction(-f[0], f[1]))
        return cls._make_irrational(f, lo, hi)

    # -- basic accessors -------------------------------------------------

    @property
    def is_rational(self):
        return self._q is not None

    def as_fraction(self):
        if self._q is None:
            raise ValueError("not rational")
        return self._q

    @property
    def minpoly(self):
        if self._q is not None:
            return polys.primitive((-self._q.numerator, self._q.denominator))
        return self._poly

    @property
    def degree(self):
        return 1 if self._q is not None else len(self._poly) - 1

    @property
    def interval(self):
        if self._q is not None:
            return RInterval(self._q, self._q)
        return RInterval(*self._iv)

    def _bisect(self):
        if self._q is not None:
            return
        lo, hi = self._iv
        mid = (lo + hi) / 2
        s_mid = polys.sign_at(self._poly, mid)
        s_lo = polys.sign_at(self._poly, lo)
        if s_mid == s_lo:
            self._iv = (mid, hi)
        else:
            self._iv = (lo, mid)

    def _narrow_to(self, width):
        """Bisect the cached interval until its width is at most ``width``."""
        if self._q is not None:
            return
        n = 0
        while self._iv[1] - self._iv[0] > width:
            self._bisect()
            n += 1
            if n > _MAX_BISECT:
                raise RuntimeError("bisection did not converge")

    def _separate_from_zero(self):
        if self._q is not None:
            return
        while self._iv[0] <= 0 <= self._iv[1]:
            self._bisect()

    # -- comparison -------------------------------------------------------

    def sign(self):
        if self._q is not None:
            return (self._q > 0) - (self._q < 0)
        self._separate_from_zero()
        return 1 if self._iv[0] > 0 else -1

    def _same_root(self, other):
        # both irrational with equal minpoly
        lo = max(self._iv[0], other._iv[0])
        hi = min(self._iv[1], other._iv[1])
        if lo > hi:
            return False
        return polys.count_roots(self._poly, lo, hi) > 0

    def compare(self, other):
        """-1, 0 or 1 as self <, ==, > other, decided exactly."""
        other = _coerce(other)
        if self._q is not None and other._q is not None:
            return (self._q > other._q) - (self._q < other._q)
        if self._q is not None:
            return -other.compare(self)
        if other._q is not None:
            q = other._q
            while self._iv[0] <= q <= self._iv[1]:
                self._bisect()
            return 1 if self._iv[0] > q else -1
        if self._poly == other._poly and self._same_root(other):
            return 0
        while True:
            if self._iv[1] < other._iv[0]:
                return -1
            if other._iv[1] < self._iv[0]:
                return 1
            if self._iv[1] - self._iv[0] >= other._iv[1] - other._iv[0]:
                self._bisect()
            else:
                other._bisect()

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if self._q is not None or other._q is not None:
            return self._q is not None and other._q is not None and self._q == other._q
        return self._poly == other._poly and self._same_root(other)

    def __hash__(self):
        if self._q is not None:
            return hash(self._q)
        return hash(self._poly)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __bool__(self):
        return not (self._q is not None and self._q == 0)

    def is_zero(self):
        return self._q is not None and self._q == 0

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        if self._q is not None:
            return AlgebraicReal(-self._q)
        lo, hi = self._iv
        return AlgebraicReal._make_irrational(polys.negate_var(self._poly), -hi, -lo)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if self._q is not None and other._q is not None:
            return AlgebraicReal(self._q + other._q)
        if other._q is not None:
            return self._add_rational(other._q)
        if self._q is not None:
            return other._add_rational(self._q)
        return _combine(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if self._q is not None and other._q is not None:
            return AlgebraicReal(self._q * other._q)
        if other._q is not None:
            return self._mul_rational(other._q)
        if self._q is not None:
            return other._mul_rational(self._q)
        return _combine(self, other, "mul")

    __rmul__ = __mul__

    def inverse(self):
        if self._q is not None:
            if self._q == 0:
                raise DivisionByZero("division by zero")
            return AlgebraicReal(1 / self._q)
        self._separate_from_zero()
        lo, hi = self._iv
        return AlgebraicReal._make_irrational(polys.reverse(self._poly), 1 / hi, 1 / lo)

    def __truediv__(self, other):
        if not isinstance(other, (AlgebraicReal, int, Fraction)):
            return NotImplemented
        other = _coerce(other)
        if self._q is not None and other._q is not None:
            if other._q == 0:
                raise DivisionByZero("division by zero")
            return AlgebraicReal(self._q / other._q)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgebraicReal(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _add_rational(self, q):
        if q == 0:
            return self
        lo, hi = self._iv
        return AlgebraicReal._make_irrational(polys.shift(self._poly, q), lo + q, hi + q)

    def _mul_rational(self, q):
        if q == 0:
            return AlgebraicReal(0)
        if q == 1:
            return self
        lo, hi = self._iv
        a, b = lo * q, hi * q
        return AlgebraicReal._make_irrational(polys.scale(self._poly, q), min(a, b), max(a, b))

    def sqrt(self):
        """Nonnegative square root."""
        s = self.sign()
        if s < 0:
            raise NegativeOperand("square root of a negative number")
        if s == 0:
            return AlgebraicReal(0)
        if self._q is not None:
            lo, hi = sqrt_bounds(self._q)
            if lo == hi:
                return AlgebraicReal(lo)
            return AlgebraicReal._from_factor(
                polys.primitive((-self._q.numerator, 0, self._q.denominator)), lo, hi
            )
        factors = polys.irreducible_factors(polys.compose_square(self._poly))

        def enclosure():
            lo, hi = self._iv
            return RInterval(sqrt_bounds(max(lo, Fraction(0)))[0], sqrt_bounds(hi)[1])

        return _select_root(factors, enclosure, (self,))

    # -- refinement & display --------------------------------------------

    def floor_scaled(self, e):
        """floor(self * 2**e), exactly."""
        if self._q is not None:
            v = self._q * (Fraction(2) ** e)
            return v.numerator // v.denominator
        s = Fraction(2) ** e
        while True:
            lo, hi = self._iv
            a, b = lo * s, hi * s
            fa = a.numerator // a.denominator
            fb = b.numerator // b.denominator
            if fa == fb:
                return fa
            self._bisect()

    def refine(self, eps):
        """Dyadic interval of width <= eps containing self.

        The result depends only on the value and ``eps``, never on the state
        of the refinement cache, so downstream certificates are reproducible.
        """
        eps = Fraction(eps)
        if eps <= 0:
            raise InvalidInput("refine needs eps > 0")
        if self._q is not None:
            return RInterval(self._q, self._q)
        e = 0
        while Fraction(1, 1 << e) > eps:
            e += 1
        k = self.floor_scaled(e)
        return RInterval(Fraction(k, 1 << e), Fraction(k + 1, 1 << e))

    def canonical_interval(self):
        """Coarsest dyadic interval [k/2^e, (k+1)/2^e], e >= 0, isolating self."""
        if self._q is not None:
            return RInterval(self._q, self._q)
        e = 0
        while True:
            k = self.floor_scaled(e)
            lo, hi = Fraction(k, 1 << e), Fraction(k + 1, 1 << e)
            if polys.count_roots(self._poly, lo, hi) == 1:
                return RInterval(lo, hi)
            e += 1

    def approx(self, bits=64):
        """Float approximation (display only)."""
        iv = self.refine(Fraction(1, 1 << bits))
        return float(iv.mid)

    def __float__(self):
        return self.approx()

    def __repr__(self):
        if self._q is not None:
            return f"AlgebraicReal({self._q})"
        return f"AlgebraicReal(root of {list(self._poly)} ~ {self.approx(40):.12g})"

    def __str__(self):
        if self._q is not None:
            return str(self._q)
        return f"~{self.approx(40):.12g}"

    def __reduce__(self):
        if self._q is not None:
            return (AlgebraicReal, (self._q,))
        return (AlgebraicReal._make_irrational, (self._poly, *self._iv))


def _coerce(x):
    return x if isinstance(x, AlgebraicReal) else AlgebraicReal(x)


def _select_root(factors, enclosure, operands):
    """Pick the unique (factor, root) pair inside a shrinking enclosure."""
    for _ in range(_MAX_BISECT):
        J = enclosure()
        hits = []
        total = 0
        for f in factors:
            if len(f) == 2:
                r = Fraction(-f[0], f[1])
                n = 1 if J.contains(r) else 0
            else:
                n = polys.count_roots(f, J.lo, J.hi)
            if n:
                hits.append(f)
                total += n
                if total > 1:
                    break
        if total == 1:
            return AlgebraicReal._from_factor(hits[0], J.lo, J.hi)
        # shrink the widest operand interval
        widest = max(operands, key=lambda x: x.interval.width)
        for op in operands:
            if op.interval.width * 4 >= widest.interval.width:
                op._bisect()
    raise RuntimeError("root selection did not converge")


def _combine(x, y, op):
    if op == "add":
        R = polys.resultant_sum(x.minpoly, y.minpoly)

        def enclosure():
            return x.interval + y.interval

    else:
        R = polys.resultant_product(x.minpoly, y.minpoly)

        def enclosure():
            return x.interval * y.interval

    return _select_root(polys.irreducible_factors(R), enclosure, (x, y))


@dataclass(frozen=True)
class AlgebraicComplex:
    re: AlgebraicReal
    im: AlgebraicReal

    def __post_init__(self):
        object.__setattr__(self, "re", _coerce(self.re))
        object.__setattr__(self, "im", _coerce(self.im))

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self):
        return self.im.is_zero()

    def conj(self):
        return AlgebraicComplex(self.re, -self.im)

    def abs_sq(self):
        return self.re * self.re + self.im * self.im

    def abs(self):
        return self.abs_sq().sqrt()

    def __add__(self, other):
        other = _coerce_complex(other)
        return AlgebraicComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _coerce_complex(other)
        return AlgebraicComplex(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return AlgebraicComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce_complex(other)
        return AlgebraicComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def scale(self, r):
        return AlgebraicComplex(self.re * r, self.im * r)

    def minpoly(self):
        """Primitive integer minimal polynomial over the rationals."""
        if self.im.is_zero():
            return self.re.minpoly
        R = polys.resultant_complex(self.re.minpoly, self.im.minpoly)
        factors = polys.irreducible_factors(R)
        if len(factors) == 1:
            return factors[0]
        eps = Fraction(1, 16)
        for _ in range(200):
            box_re = self.re.refine(eps)
            box_im = self.im.refine(eps)
            found = []
            for f in factors:
                for (xr, yr) in polys.complex_root_boxes(f, eps):
                    if (xr[0] <= box_re.hi and box_re.lo <= xr[1]
                            and yr[0] <= box_im.hi and box_im.lo <= yr[1]):
                        found.append(f)
                        break
            if len(found) == 1:
                return found[0]
            eps /= 16
        raise RuntimeError("could not identify the minimal polynomial")

    @property
    def degree(self):
        return len(self.minpoly()) - 1

    def __repr__(self):
        return f"AlgebraicComplex({self.re!s} + {self.im!s}i)"


def _coerce_complex(x):
    if isinstance(x, AlgebraicComplex):
        return x
    return AlgebraicComplex(_coerce(x), AlgebraicReal(0))
