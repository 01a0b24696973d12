"""Elliptic curves over prime fields, translated endomorphisms, and the orbit bridge.

A map g = tau_Q o h (h an endomorphism, tau_Q translation by Q) satisfies
g^n = tau_{(h^n - 1)(R)} o h^n whenever (h - 1)(R) = Q.  In an imaginary
quadratic endomorphism order, an orbit coincidence f^m = h^n (up to a common
iterate) turns into the unit equation  h^n (u + d) - f^m d = u  with
u = (conj(h)^n0 - 1)(f^m0 - h^n0), d = N(h^n0 - 1).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import InvalidInput, OffCurve, PreconditionFailed
from .quat import ONE, Quaternion
from .realalg import AlgebraicReal
from .semigroup import SemigroupSpec

INFINITY = None


@dataclass(frozen=True)
class PrimeCurve:
    """y^2 = x^3 + a4 x + a6 over F_p."""

    p: int
    a4: int
    a6: int

    def __post_init__(self):
        if self.p <= 3 or not isprime(self.p):
            raise InvalidInput("p must be a prime > 3", "curve.p")
        object.__setattr__(self, "a4", self.a4 % self.p)
        object.__setattr__(self, "a6", self.a6 % self.p)
        if (4 * self.a4 ** 3 + 27 * self.a6 ** 2) % self.p == 0:
            raise InvalidInput("singular curve", "curve")

    def rhs(self, x):
        return (x * x * x + self.a4 * x + self.a6) % self.p

    def contains(self, P):
        if P is INFINITY:
            return True
        x, y = P
        return (y * y - self.rhs(x)) % self.p == 0

    def check(self, P):
        if not self.contains(P):
            raise OffCurve(f"point {P} is not on the curve")
        return P

    def random_point(self, rng):
        while True:
            x = rng.randrange(self.p)
            r = sqrt_mod(self.rhs(x), self.p)
            if r is not None:
                return (x, r if rng.random() < 0.5 else (-r) % self.p)


def neg(curve, P):
    if P is INFINITY:
        return P
    return (P[0], (-P[1]) % curve.p)


def point_add(curve, P, Q):
    curve.check(P)
    curve.check(Q)
    return _add(curve, P, Q)


def _add(curve, P, Q):
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    p = curve.p
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return INFINITY
        lam = (3 * x1 * x1 + curve.a4) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def scalar_mul(curve, n, P):
    curve.check(P)
    if n < 0:
        n, P = -n, neg(curve, P)
    acc = INFINITY
    while n:
        if n & 1:
            acc = _add(curve, acc, P)
        P = _add(curve, P, P)
        n >>= 1
    return acc


# -- imaginary quadratic orders --------------------------------------------


@dataclass(frozen=True)
class QuadOrder:
    """Z[w] with w^2 = t w - n and discriminant t^2 - 4n < 0."""

    t: int
    n: int

    def __post_init__(self):
        if self.t * self.t - 4 * self.n >= 0:
            raise InvalidInput("order must be imaginary quadratic")

    @classmethod
    def from_discriminant(cls, disc):
        if disc >= 0 or disc % 4 not in (0, 1):
            raise InvalidInput(f"{disc} is not a negative discriminant", "disc")
        if disc % 4 == 0:
            return cls(0, -disc // 4)
        return cls(1, (1 - disc) // 4)

    @property
    def disc(self):
        return self.t * self.t - 4 * self.n

    def __call__(self, x, y=0):
        return QuadOrderElem(x, y, self)


@dataclass(frozen=True)
class QuadOrderElem:
    x: int
    y: int
    order: QuadOrder

    def _lift(self, other):
        if isinstance(other, QuadOrderElem):
            if other.order != self.order:
                raise InvalidInput("elements of different orders")
            return other
        return QuadOrderElem(int(other), 0, self.order)

    def __add__(self, other):
        o = self._lift(other)
        return QuadOrderElem(self.x + o.x, self.y + o.y, self.order)

    __radd__ = __add__

    def __neg__(self):
        return QuadOrderElem(-self.x, -self.y, self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        t, n = self.order.t, self.order.n
        a, b, c, d = self.x, self.y, o.x, o.y
        return QuadOrderElem(a * c - n * b * d, a * d + b * c + t * b * d, self.order)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise InvalidInput("negative powers leave the order")
        out = QuadOrderElem(1, 0, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        return QuadOrderElem(self.x + self.y * self.order.t, -self.y, self.order)

    def norm(self):
        return self.x * self.x + self.order.t * self.x * self.y + self.order.n * self.y * self.y

    def trace(self):
        return 2 * self.x + self.order.t * self.y

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def __str__(self):
        return f"{self.x}+{self.y}w"


def _three_squares(m):
    """Integers (a, b, c) with a^2 + b^2 + c^2 = m, or None."""
    for a in range(isqrt(m), -1, -1):
        r = m - a * a
        for b in range(isqrt(r), -1, -1):
            c2 = r - b * b
            c = isqrt(c2)
            if c * c == c2:
                return a, b, c
    return None


def omega_quaternion(order):
    """A quaternion with the trace t and norm n of w (rational coordinates when possible)."""
    m = 4 * order.n - order.t ** 2  # 4 * |vector part|^2
    half_t = Fraction(order.t, 2)
    sq = _three_squares(m)
    if sq is not None:
        a, b, c = sq
        return Quaternion(half_t, Fraction(a, 2), Fraction(b, 2), Fraction(c, 2))
    return Quaternion(half_t, AlgebraicReal(m).sqrt() / 2)


def embed_element(z, w=None):
    w = omega_quaternion(z.order) if w is None else w
    return ONE * z.x + w * z.y


# -- endomorphisms acting on points ----------------------------------------


@dataclass(frozen=True)
class ScalarEndo:
    m: int

    def apply(self, curve, P):
        return scalar_mul(curve, self.m, P)

    def minus_one(self):
        return ScalarEndo(self.m - 1)

    def power(self, k):
        return ScalarEndo(self.m ** k)


def _i_action(curve):
    if curve.a6 != 0 or curve.p % 4 != 1:
        raise InvalidInput("Z[i] acts only on y^2 = x^3 + a4 x with p = 1 mod 4", "endomorphism")
    iota = sqrt_mod(curve.p - 1, curve.p)
    return lambda P: INFINITY if P is INFINITY else ((-P[0]) % curve.p, P[1] * iota % curve.p)


def _w_action(curve):
    if curve.a4 != 0 or curve.p % 3 != 1:
        raise InvalidInput("Z[(1+sqrt-3)/2] acts only on y^2 = x^3 + a6 with p = 1 mod 3", "endomorphism")
    beta = next(b for b in range(2, curve.p) if pow(b, 3, curve.p) == 1)
    # w = -zeta^2 where zeta(x, y) = (beta x, y)
    return lambda P: INFINITY if P is INFINITY else (P[0] * beta * beta % curve.p, (-P[1]) % curve.p)


@dataclass(frozen=True)
class OrderEndo:
    """x + y w acting through an explicit automorphism w (discriminants -4 and -3)."""

    elem: QuadOrderElem

    def _w(self, curve):
        disc = self.elem.order.disc
        if disc == -4:
            return _i_action(curve)
        if disc == -3:
            return _w_action(curve)
        raise InvalidInput(f"no explicit action for discriminant {disc}", "endomorphism.disc")

    def apply(self, curve, P):
        curve.check(P)
        w = self._w(curve)
        return _add(curve, scalar_mul(curve, self.elem.x, P), scalar_mul(curve, self.elem.y, w(P)))

    def minus_one(self):
        return OrderEndo(self.elem - 1)

    def power(self, k):
        return OrderEndo(self.elem ** k)


@dataclass(frozen=True)
class AffineDynamic:
    """P -> h(P) + q."""

    h: object
    q: object

    def apply(self, curve, P):
        return _add(curve, self.h.apply(curve, P), self.q)

    def iterate(self, curve, P, n):
        for _ in range(n):
            P = self.apply(curve, P)
        return P


def translation_for(curve, h, R):
    """The translation Q = (h - 1)(R)."""
    return h.minus_one().apply(curve, R)


def verify_translation_identity(curve, h, Q, R, n_max, trials=1, rng=None, stats=None):
    """Check g^n(P) = (h^n - 1)(R) + h^n(P) for g = tau_Q o h, random P, 1 <= n <= n_max."""
    curve.check(Q)
    curve.check(R)
    if translation_for(curve, h, R) != Q:
        raise PreconditionFailed("(h - 1)(R) != Q")
    if n_max < 1:
        raise PreconditionFailed("n_max must be >= 1")
    rng = rng or random.Random(0)
    g = AffineDynamic(h, Q)
    ok = True
    for _ in range(trials):
        P = curve.random_point(rng)
        gP, hP, hR = P, P, R
        for _n in range(1, n_max + 1):
            gP = g.apply(curve, gP)
            hP = h.apply(curve, hP)
            hR = h.apply(curve, hR)
            closed = _add(curve, _add(curve, hR, neg(curve, R)), hP)
            if stats is not None:
                stats["checks"] = stats.get("checks", 0) + 1
            if closed != gP:
                ok = False
    return ok


def orbit_intersection(curve, f_map, g_map, A, B, max_iter):
    """All (m, n) in [1, max_iter]^2 with f^m(A) = g^n(B)."""
    if max_iter < 1:
        raise InvalidInput("max_iter must be >= 1", "max_iter")
    curve.check(A)
    curve.check(B)
    where = {}
    P = A
    for m in range(1, max_iter + 1):
        P = f_map.apply(curve, P)
        where.setdefault(P, []).append(m)
    out = []
    P = B
    for n in range(1, max_iter + 1):
        P = g_map.apply(curve, P)
        for m in where.get(P, ()):
            out.append((m, n))
    return sorted(out)


# -- the bridge to unit equations --------------------------------------------


@dataclass(frozen=True)
class EndoCheck:
    u: QuadOrderElem
    d: int
    holds: bool
    common_iterate: bool


@dataclass(frozen=True)
class CommonIterate:
    """u = 0: f^m0 and h^n0 coincide (so the orbit coincidence is explained by a common iterate)."""

    m0: int
    n0: int
    f_power: QuadOrderElem
    h_power: QuadOrderElem


def _check_norms(f, h):
    if f.norm() <= 1 or h.norm() <= 1:
        raise PreconditionFailed("f and h need norm > 1")


def bridge_constants(f, h, m0, n0):
    hn = h ** n0
    u = (hn.conj() - 1) * (f ** m0 - hn)
    d = (hn - 1).norm()
    return u, d


def endo_equation_check(f, h, m0, n0, m, n):
    """u, d and whether h^n (u + d) - f^m d = u."""
    _check_norms(f, h)
    u, d = bridge_constants(f, h, m0, n0)
    lhs = (h ** n) * (u + d) - (f ** m) * d
    flag = u.is_zero() and (h ** n0).conj() != QuadOrderElem(1, 0, h.order)
    return EndoCheck(u, d, lhs == u, flag)


def dynamics_to_unit_equation(f, h, m0, n0):
    """UnitEquationInstance for  h^n (u + d) - f^m d = u, or CommonIterate when u = 0."""
    from .solver import UnitEquationInstance

    _check_norms(f, h)
    u, d = bridge_constants(f, h, m0, n0)
    if u.is_zero():
        return CommonIterate(m0, n0, f ** m0, h ** n0)
    w = omega_quaternion(f.order)
    uq = embed_element(u, w)
    u_inv = uq.inverse()
    a_p = (uq + Quaternion(d)) * u_inv
    b_p = -(Quaternion(d) * u_inv)
    g1 = SemigroupSpec((embed_element(h, w),), ("h",))
    g2 = SemigroupSpec((embed_element(f, w),), ("f",))
    return UnitEquationInstance(ONE, a_p, ONE, b_p, g1, g2)


__all__ = [
    "INFINITY",
    "AffineDynamic",
    "CommonIterate",
    "EndoCheck",
    "OrderEndo",
    "PrimeCurve",
    "QuadOrder",
    "QuadOrderElem",
    "ScalarEndo",
    "bridge_constants",
    "dynamics_to_unit_equation",
    "embed_element",
    "endo_equation_check",
    "neg",
    "omega_quaternion",
    "orbit_intersection",
    "point_add",
    "scalar_mul",
    "translation_for",
    "verify_translation_identity",
]
