"""Hamilton quaternions over exact real algebraic numbers."""

from dataclasses import dataclass

from .errors import ZeroDivisor
from .realalg import AlgebraicReal


def _r(x):
    return x if isinstance(x, AlgebraicReal) else AlgebraicReal(x)


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k with i^2 = j^2 = k^2 = -1, ij = -ji = k."""

    a: AlgebraicReal = AlgebraicReal(0)
    b: AlgebraicReal = AlgebraicReal(0)
    c: AlgebraicReal = AlgebraicReal(0)
    d: AlgebraicReal = AlgebraicReal(0)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _r(getattr(self, name)))

    @property
    def coords(self):
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def scalar(cls, x):
        return cls(_r(x))

    def is_zero(self):
        return all(x.is_zero() for x in self.coords)

    def is_real(self):
        return self.b.is_zero() and self.c.is_zero() and self.d.is_zero()

    def __add__(self, other):
        other = _q(other)
        return Quaternion(*(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-_q(other))

    def __rsub__(self, other):
        return _q(other) - self

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            s = _r(other)
            return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s)
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = other.coords
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        # scalars are central
        return self * other

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            raise TypeError("ambiguous quaternion division; use inverse() on the chosen side")
        s = _r(other)
        return Quaternion(self.a / s, self.b / s, self.c / s, self.d / s)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def trace(self):
        return self.a * 2

    def abs(self):
        return self.norm().sqrt()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisor("zero quaternion has no inverse")
        return self.conj() / self.norm()

    def __repr__(self):
        return f"Quaternion({self.a!s}, {self.b!s}, {self.c!s}, {self.d!s})"


def _q(x):
    return x if isinstance(x, Quaternion) else Quaternion(_r(x))


ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def q_mul(x, y):
    return x * y


def q_conj(x):
    return x.conj()


def q_norm(x):
    return x.norm()


def q_trace(x):
    return x.trace()


def q_abs(x):
    return x.abs()


def q_inv(x):
    return x.inverse()


def inner(x, y):
    """Euclidean inner product with 1, i, j, k orthonormal."""
    return x.a * y.a + x.b * y.b + x.c * y.c + x.d * y.d


def quadratic_relation_check(x):
    """x^2 - tr(x) x + N(x) = 0, exactly."""
    return (x * x - x * x.trace() + Quaternion(x.norm())).is_zero()
