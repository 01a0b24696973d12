"""Explicit lower bounds for nonzero linear forms in logarithms.

For algebraic alpha_1..alpha_r with chosen logarithms lambda_i and integers
b_i with max|b_i| <= H, a nonzero form L = sum b_i lambda_i satisfies

    ln|L| > -C(r, d) * prod h'(lambda_i) * max(ln H, 1/d)

with C(r, d) = 18 (r+1)! r^(r+1) (32 d)^(r+2) ln(2 r d) and
h'(lambda) = max(h(alpha), |lambda| / d, 1/d).  Writing C for the product of
everything but the last factor, the certified bound is

    |L| > k * min(H^-C, e^(-C/d)),   k = 1.

Every constant is rounded up before it enters C and every bound returned here
is rounded down.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import InvalidInput, PrecisionFailure, ZeroAlpha
from .realalg import AlgebraicComplex, AlgebraicReal, RInterval, log_interval, sqrt_bounds, weil_height
from .realalg.transcend import ln2_interval, ln_of_interval

C_DENOMINATOR = 1 << 32
_EXACT_POWER_LIMIT = 1 << 14


def _ceil(q):
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def _floor(q):
    q = Fraction(q)
    return q.numerator // q.denominator


def _round_up(q, den=C_DENOMINATOR):
    return Fraction(_ceil(Fraction(q) * den), den)


_ZERO = RInterval(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class LogGenerator:
    """An algebraic number together with a certified enclosure of one of its logarithms."""

    alpha: object
    lam_re: RInterval = _ZERO
    lam_im: RInterval = _ZERO
    degree_bound: int | None = None

    @classmethod
    def real_log(cls, alpha, bits=64):
        """lambda = ln(alpha) for a positive real algebraic alpha."""
        alpha = AlgebraicReal(alpha) if not isinstance(alpha, AlgebraicReal) else alpha
        if alpha.is_zero():
            raise ZeroAlpha("alpha = 0 has no logarithm")
        if alpha.sign() < 0:
            raise InvalidInput("real_log needs alpha > 0; use unit_arg or a complex branch")
        return cls(alpha, log_interval(alpha, bits), _ZERO)

    @classmethod
    def unit_arg(cls, alpha, theta):
        """lambda = i * theta for a unit-modulus alpha = e^(i theta)."""
        return cls(alpha, _ZERO, theta)

    def is_zero_alpha(self):
        return self.alpha.is_zero()

    def alpha_degree(self):
        if isinstance(self.alpha, AlgebraicComplex):
            if self.alpha.is_real():
                return self.alpha.re.degree
            return _complex_degree(self.alpha)
        return AlgebraicReal(self.alpha).degree

    def abs_upper(self):
        """Rational upper bound on |lambda|."""
        re = max(abs(self.lam_re.lo), abs(self.lam_re.hi))
        im = max(abs(self.lam_im.lo), abs(self.lam_im.hi))
        return sqrt_bounds(re * re + im * im)[1]

    def height_upper(self, bits):
        return weil_height(self.alpha, bits).hi


_complex_degrees = {}


def _complex_degree(z):
    key = (z.re, z.im)
    if key not in _complex_degrees:
        _complex_degrees[key] = z.degree
    return _complex_degrees[key]


@dataclass(frozen=True)
class BakerCertificate:
    """|sum b_i lambda_i| > k * min(H^-C, e^(-C/d)) whenever the form is nonzero."""

    k: Fraction
    C: Fraction
    r: int
    d: int
    generators: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "C", Fraction(self.C))
        if self.k <= 0 or self.C < 0 or self.d < 1:
            raise InvalidInput("certificate needs k > 0, C >= 0, d >= 1")

    def to_dict(self):
        return {"k": str(self.k), "C": str(self.C), "r": self.r, "d": self.d}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(Fraction(data["k"]), Fraction(data["C"]), int(data["r"]), int(data["d"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidInput(f"malformed certificate: {exc}") from exc


def structural_constant(r, d, bits=64):
    """Upper rational bound on 18 (r+1)! r^(r+1) (32d)^(r+2) ln(2rd)."""
    head = 18 * factorial(r + 1) * r ** (r + 1) * (32 * d) ** (r + 2)
    return head * log_interval(2 * r * d, bits).hi


def default_degree_bound(gens):
    """Product of the degrees of the distinct alphas (bounds the degree of the field they generate)."""
    seen = []
    d = 1
    for g in gens:
        if any(g.alpha == s for s in seen):
            continue
        seen.append(g.alpha)
        d *= g.alpha_degree()
    return d


def explicit_constants(gens, degree_bound=None, bits=64):
    gens = tuple(gens)
    if not gens:
        raise InvalidInput("a linear form needs at least one logarithm")
    for i, g in enumerate(gens):
        if g.is_zero_alpha():
            raise ZeroAlpha(f"alpha {i} is zero", path=f"generators[{i}]")
    r = len(gens)
    d = degree_bound if degree_bound is not None else default_degree_bound(gens)
    if d < 1:
        raise InvalidInput("degree bound must be >= 1")
    C = structural_constant(r, d, bits)
    inv_d = Fraction(1, d)
    for g in gens:
        C *= max(g.height_upper(bits), g.abs_upper() * inv_d, inv_d)
    return BakerCertificate(Fraction(1), _round_up(C), r, d, gens)


@dataclass(frozen=True)
class ScaledFraction:
    """The positive rational mantissa * 2^-shift, kept factored so tiny bounds stay cheap."""

    mantissa: Fraction
    shift: int = 0

    def _log2_window(self):
        # floor/ceil style exponent bounds: 2^lo <= value < 2^hi
        m = self.mantissa
        top = m.numerator.bit_length() - (m.denominator.bit_length() - 1)
        bottom = (m.numerator.bit_length() - 1) - m.denominator.bit_length()
        return bottom - self.shift, top - self.shift

    def exact(self):
        if self.shift > _EXACT_POWER_LIMIT * 16:
            raise OverflowError("value too small to materialise")
        return self.mantissa / (1 << self.shift)

    def _cmp(self, other):
        if isinstance(other, ScaledFraction):
            s = min(self.shift, other.shift)
            if max(self.shift, other.shift) - s > _EXACT_POWER_LIMIT * 16:
                return _sign_cmp(self._log2_window(), other._log2_window())
            other = other.mantissa / (Fraction(2) ** (other.shift - s))
            return ScaledFraction(self.mantissa, self.shift - s)._cmp_fraction(other)
        return self._cmp_fraction(Fraction(other))

    def _cmp_fraction(self, q):
        if q <= 0:
            return 1
        lo, hi = self._log2_window()
        qlo = (q.numerator.bit_length() - 1) - q.denominator.bit_length()
        qhi = q.numerator.bit_length() - (q.denominator.bit_length() - 1)
        if hi <= qlo:
            return -1
        if lo >= qhi:
            return 1
        lhs = self.mantissa
        rhs = q * (Fraction(2) ** self.shift)
        return (lhs > rhs) - (lhs < rhs)

    def floor_scaled(self, p):
        """floor(value * 2^p)."""
        e = p - self.shift
        if e >= 0:
            return _floor(self.mantissa * (1 << e))
        if self._log2_window()[1] + p <= 0:
            return 0
        return _floor(self.mantissa / (1 << -e))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ScaledFraction)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.mantissa, self.shift))

    def __str__(self):
        return str(self.mantissa) if self.shift == 0 else f"{self.mantissa}*2^-{self.shift}"

    def to_dict(self):
        return {"mantissa": str(self.mantissa), "shift": self.shift}


def _sign_cmp(a, b):
    if a[1] <= b[0]:
        return -1
    if a[0] >= b[1]:
        return 1
    raise PrecisionFailure("cannot order two extremely small bounds")


def _inv_ln2_upper(bits=64):
    return 1 / ln2_interval(bits + 8).lo


def lower_bound(cert, H, bits=64):
    """Rational lower bound on every nonzero form of height <= H."""
    if not isinstance(H, int) or H < 1:
        raise InvalidInput("height must be a positive integer")
    k, C = cert.k, cert.C
    if C == 0:
        return ScaledFraction(k)
    if H ** cert.d >= 3:
        # ln H >= 1/d: the power branch is the smaller one
        if C.denominator == 1 and C.numerator * H.bit_length() <= _EXACT_POWER_LIMIT:
            return ScaledFraction(k / Fraction(H) ** C.numerator)
        log2H = log_interval(H, bits).hi * _inv_ln2_upper(bits)
        return ScaledFraction(k, _ceil(C * log2H))
    return ScaledFraction(k, _ceil(C / cert.d * _inv_ln2_upper(bits)))


def _log_gap(cert, rate, scale, height_factor, n, prec):
    """Enclosure of ln(k) - C max(ln(F n), 1/d) - ln(scale) + rate n."""
    lnk = log_interval(cert.k, prec) if cert.k != 1 else _ZERO
    lnH = log_interval(Fraction(height_factor) * n, prec)
    inv_d = Fraction(1, cert.d)
    m = RInterval(max(lnH.lo, inv_d), max(lnH.hi, inv_d))
    lns = ln_of_interval(scale, prec)
    return lnk - m * cert.C - lns + rate * n


def height_inequality_holds(cert, decay_rate, decay_scale, n, height_factor=1, max_prec=4096):
    """Certified truth of  scale e^(-rate n) < k min((F n)^-C, e^(-C/d)).

    Returns True, False, or None when undecided at ``max_prec`` bits.
    """
    prec = 64
    while prec <= max_prec:
        gap = _log_gap(cert, decay_rate, decay_scale, height_factor, n, prec)
        if gap.lo > 0:
            return True
        if gap.hi <= 0:
            return False
        prec *= 2
    return None


def _check_inputs(decay_rate, decay_scale, height_factor):
    if decay_rate.lo <= 0:
        raise InvalidInput("decay rate must be certified positive")
    if decay_scale.lo <= 0:
        raise InvalidInput("decay scale must be certified positive")
    if Fraction(height_factor) < 1:
        raise InvalidInput("height factor must be >= 1")


def solve_height_cap(cert, decay_rate, decay_scale, height_factor=1, limit_bits=4096):
    """Smallest verified n0 with  scale e^(-rate n) < k min((F n)^-C, e^(-C/d))  for all n >= n0.

    The log of the ratio is increasing while (F n)^d stays below e, convex
    afterwards with its minimum near C / rate, and increasing beyond that; an
    undecided comparison counts as a failure, which only makes n0 larger.
    """
    decay_rate = RInterval(Fraction(decay_rate.lo), Fraction(decay_rate.hi))
    decay_scale = RInterval(Fraction(decay_scale.lo), Fraction(decay_scale.hi))
    _check_inputs(decay_rate, decay_scale, height_factor)
    F = Fraction(height_factor)

    def good(n):
        return height_inequality_holds(cert, decay_rate, decay_scale, n, F) is True

    def first_good_increasing(lo, hi):
        # smallest n in (lo, hi] with good(n), given good(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if good(mid):
                hi = mid
            else:
                lo = mid
        return hi

    # boundaries of the constant-then-log structure: (F n)^d <= 2 and >= 3
    d = cert.d
    n_const = 0
    while (F * (n_const + 1)) ** d <= 2:
        n_const += 1
    n_log = n_const + 1
    while (F * n_log) ** d < 3:
        n_log += 1

    if cert.C == 0:
        turn_lo = turn_hi = n_log
    else:
        turn_lo = max(n_log, _floor(cert.C / decay_rate.hi))
        turn_hi = max(n_log, _ceil(cert.C / decay_rate.lo))
    if turn_hi - turn_lo > 64:
        raise PrecisionFailure("decay rate enclosure too wide to locate the turning point")

    last_bad = None
    for n in range(turn_lo, turn_hi + 1):
        if not good(n):
            last_bad = n
    if last_bad is not None:
        if last_bad < turn_hi:
            return last_bad + 1
        step = 1
        while not good(last_bad + step):
            step *= 2
            if (last_bad + step).bit_length() > limit_bits:
                raise PrecisionFailure("height cap search ran past the size limit")
        return first_good_increasing(last_bad + step // 2 if step > 1 else last_bad, last_bad + step)

    # the integer minimum of the convex tail was checked, so all n >= n_log are good;
    # walk the transition integers, then the increasing head
    for n in range(n_log - 1, n_const, -1):
        if not good(n):
            return n + 1
    if n_const == 0:
        return 1
    if not good(n_const):
        return n_const + 1
    if good(1):
        return 1
    return first_good_increasing(1, n_const)


__all__ = [
    "BakerCertificate",
    "LogGenerator",
    "ScaledFraction",
    "default_degree_bound",
    "explicit_constants",
    "height_inequality_holds",
    "lower_bound",
    "solve_height_cap",
    "structural_constant",
]
