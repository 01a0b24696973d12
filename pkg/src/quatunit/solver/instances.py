"""Problem instances, the commutative embedding, and solution records."""

from dataclasses import dataclass, field
from functools import cmp_to_key

from ..errors import InvalidInput, NotCommutative, NotCoplanar
from ..quat import I, Quaternion, inner
from ..realalg import AlgebraicComplex, arg_interval
from ..semigroup import SemigroupSpec, validate

ORACLE_COMPLETE_BELOW_CAP = "ORACLE_COMPLETE_BELOW_CAP"
ORACLE_WINDOW_ONLY = "ORACLE_WINDOW_ONLY"
OVERFLOW = "OVERFLOW"
CAP_LIMIT = 1 << 64


@dataclass(frozen=True)
class UnitEquationInstance:
    """a f a' + b g b' = 1 with f in gamma1, g in gamma2."""

    a: Quaternion
    a_p: Quaternion
    b: Quaternion
    b_p: Quaternion
    gamma1: SemigroupSpec
    gamma2: SemigroupSpec

    def validate(self):
        for name in ("a", "a_p", "b", "b_p"):
            if getattr(self, name).is_zero():
                raise InvalidInput("unit must be nonzero", path=name)
        for name in ("gamma1", "gamma2"):
            try:
                validate(getattr(self, name))
            except InvalidInput as exc:
                exc.path = f"{name}.generators[{exc.index}]" if hasattr(exc, "index") else name
                raise
        return self

    def g_for(self, f):
        """The unique g completing f: b^-1 (1 - a f a') b'^-1."""
        rest = Quaternion(1) - self.a * f * self.a_p
        return self.b.inverse() * rest * self.b_p.inverse()

    def holds(self, f, g):
        return self.a * f * self.a_p + self.b * g * self.b_p == Quaternion(1)

    def locus(self):
        return LocusInstance(self.a, self.a_p, self.gamma1)


@dataclass(frozen=True)
class LocusInstance:
    """The hyperplane |1 - a f a'| = |a f a'| for f in a commutative gamma."""

    a: Quaternion
    a_p: Quaternion
    gamma: SemigroupSpec

    def validate(self, require_commutative=True):
        for name in ("a", "a_p"):
            if getattr(self, name).is_zero():
                raise InvalidInput("unit must be nonzero", path=name)
        v = validate(self.gamma)
        if require_commutative and not v.commutative:
            raise NotCommutative("the locus semigroup must be commutative", path="gamma")
        return self

    @property
    def d(self):
        return self.a.inverse() * self.a_p.inverse()


def on_hyperplane(d, f):
    """2 <d, f> = N(d), exactly."""
    return inner(d, f) * 2 == d.norm()


@dataclass(frozen=True)
class CommutativeEmbedding:
    """Generators written as re + im * u with u^2 = -1."""

    u: Quaternion
    images: tuple
    theta_intervals: tuple
    real: bool

    def image_of(self, q):
        return AlgebraicComplex(q.a, inner(q, self.u))

    def lift(self, z):
        return Quaternion(z.re) + self.u * z.im


def embed_commutative(gamma, bits=64):
    v = validate(gamma)
    if not v.commutative:
        raise NotCommutative("embedding needs commuting generators")
    anchor = next((g for g in gamma.generators if not g.is_real()), None)
    if anchor is None:
        u, real = I, True
    else:
        vec = Quaternion(0, anchor.b, anchor.c, anchor.d)
        u, real = vec / vec.norm().sqrt(), False
    emb = CommutativeEmbedding(u, (), (), real)
    images = []
    for i, g in enumerate(gamma.generators):
        z = emb.image_of(g)
        if emb.lift(z) != g:
            raise NotCoplanar(f"generator {i} leaves span(1, u)")
        images.append(z)
    thetas = tuple(arg_interval(z, bits) for z in images)
    return CommutativeEmbedding(u, tuple(images), thetas, real)


@dataclass(frozen=True)
class Solution:
    f_word: object
    g_word: object
    f_value: Quaternion
    g_value: Quaternion

    def max_exponent(self):
        return max(self.f_word.max_exponent(), self.g_word.max_exponent())


def _cmp_quat(x, y):
    c = x.norm().compare(y.norm())
    if c:
        return c
    for p, q in zip(x.coords, y.coords):
        c = p.compare(q)
        if c:
            return c
    return 0


def _cmp_solution(s, t):
    return _cmp_quat(s.f_value, t.f_value) or _cmp_quat(s.g_value, t.g_value)


def sort_solutions(solutions):
    return sorted(solutions, key=cmp_to_key(_cmp_solution))


@dataclass
class SolutionSet:
    solutions: list
    certificate: dict | None = None
    completeness_status: str = ORACLE_WINDOW_ONLY
    extra: dict = field(default_factory=dict)

    def value_pairs(self):
        return {(s.f_value, s.g_value) for s in self.solutions}

    def exponent_pairs(self):
        return [(len(s.f_word), len(s.g_word)) for s in self.solutions]
