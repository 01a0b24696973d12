"""Finitely generated semigroups of quaternions whose generators have norm > 1.

Because N(w g) = N(w) N(g) and every N(g) > 1, the elements of norm at most a
bound form a finite set and a breadth-first walk over words, pruned by norm,
finds all of them.  Commutative specs walk exponent vectors (nondecreasing
words) instead of words, so each lattice point is visited once.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import InvalidInput, NormNotAboveOne, ResourceLimit, ZeroGenerator
from .quat import Quaternion
from .realalg import AlgebraicReal, RInterval, log_interval

DEFAULT_ELEMENT_CAP = 10**7
WITNESS_CAP = 16


@dataclass(frozen=True)
class Word:
    indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise ValueError("the empty word is not a semigroup element")

    def __len__(self):
        return len(self.indices)

    def exponents(self, n_generators):
        counts = Counter(self.indices)
        return tuple(counts.get(i, 0) for i in range(n_generators))

    def max_exponent(self):
        return max(Counter(self.indices).values())

    def evaluate(self, spec):
        value = spec.generators[self.indices[0]]
        for i in self.indices[1:]:
            value = value * spec.generators[i]
        return value

    def sort_key(self):
        return (len(self.indices), self.indices)


@dataclass(frozen=True)
class SemigroupSpec:
    generators: tuple
    labels: tuple = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise InvalidInput("a semigroup needs at least one generator")
        object.__setattr__(self, "generators", gens)
        labels = tuple(self.labels) or tuple(f"g{i + 1}" for i in range(len(gens)))
        if len(labels) != len(gens):
            raise InvalidInput("labels and generators differ in length")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.generators)

    @property
    def norms(self):
        return tuple(g.norm() for g in self.generators)


@dataclass(frozen=True)
class Validation:
    ok: bool
    commutative: bool


@dataclass
class EnumeratedElement:
    value: Quaternion
    witnesses: list
    abs_sq: AlgebraicReal

    @property
    def word(self):
        return self.witnesses[0]


@dataclass
class EnumerationStats:
    explored: int = 0
    levels: int = 0


def validate(spec):
    """Check the standing hypotheses; raises on the first offending generator."""
    for i, g in enumerate(spec.generators):
        if g.is_zero():
            raise ZeroGenerator(i)
        if g.norm() <= 1:
            raise NormNotAboveOne(i)
    gens = spec.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[i] == gens[j]:
                raise InvalidInput(f"generators {i} and {j} coincide")
    return Validation(True, is_commutative(spec))


def is_commutative(spec):
    gens = spec.generators
    return all(gens[i] * gens[j] == gens[j] * gens[i] for i in range(len(gens)) for j in range(i + 1, len(gens)))


def _compare_values(x, y):
    for a, b in zip(x.coords, y.coords):
        c = a.compare(b)
        if c:
            return c
    return 0


def _compare_elements(x, y):
    c = x.abs_sq.compare(y.abs_sq)
    if c:
        return c
    c = _compare_values(x.value, y.value)
    if c:
        return c
    kx, ky = x.word.sort_key(), y.word.sort_key()
    return (kx > ky) - (kx < ky)


def canonical_order(elements):
    return sorted(elements, key=cmp_to_key(_compare_elements))


def _walk(spec, bound_sq=None, max_len=None, cap=DEFAULT_ELEMENT_CAP, commutative=None, stats=None, stop_at=None):
    """Breadth-first walk shared by enumeration and membership.

    Returns the dict value -> EnumeratedElement (insertion order = discovery
    order, so the first witness of each value is its length-lex smallest word).
    With ``stop_at`` set, returns early as soon as that value is reached.
    """
    if bound_sq is None and max_len is None:
        raise InvalidInput("enumeration needs a norm bound or a length bound")
    if commutative is None:
        commutative = is_commutative(spec)
    if bound_sq is not None:
        bound_sq = AlgebraicReal(bound_sq)
    norms = spec.norms
    n = len(spec.generators)
    found = {}
    stats = stats if stats is not None else EnumerationStats()

    def admissible(norm):
        return bound_sq is None or norm <= bound_sq

    frontier = []
    for i in range(n):
        if admissible(norms[i]):
            frontier.append((spec.generators[i], (i,), norms[i]))
    length = 1
    while frontier:
        stats.levels = length
        nxt = []
        for value, word, norm in frontier:
            stats.explored += 1
            if stats.explored > cap:
                raise ResourceLimit(f"enumeration exceeded the cap of {cap} elements")
            elem = found.get(value)
            if elem is None:
                found[value] = EnumeratedElement(value, [Word(word)], norm)
                if stop_at is not None and value == stop_at:
                    return found
                expand = True
            else:
                if len(elem.witnesses) < WITNESS_CAP:
                    elem.witnesses.append(Word(word))
                # right-multiples of an already expanded value add nothing new
                expand = commutative
            if not expand or (max_len is not None and length >= max_len):
                continue
            start = word[-1] if commutative else 0
            for j in range(start, n):
                child_norm = norm * norms[j]
                if admissible(child_norm):
                    nxt.append((value * spec.generators[j], word + (j,), child_norm))
        frontier = nxt
        length += 1
    return found


def enumerate_up_to(spec, bound_sq, cap=DEFAULT_ELEMENT_CAP, max_len=None, stats=None):
    """All elements with N(f) <= bound_sq, deduplicated, in canonical order."""
    validate(spec)
    return canonical_order(_walk(spec, bound_sq=bound_sq, max_len=max_len, cap=cap, stats=stats).values())


def enumerate_words(spec, max_len, cap=DEFAULT_ELEMENT_CAP, stats=None):
    """All elements having a witness word of length <= max_len, in canonical order."""
    validate(spec)
    if max_len <= 0:
        return []
    return canonical_order(_walk(spec, max_len=max_len, cap=cap, stats=stats).values())


def membership(spec, q, max_len=None, cap=DEFAULT_ELEMENT_CAP):
    """Shortest (then lexicographically least) word evaluating to q, or None.

    Exact: every element with norm <= N(q) is examined.
    """
    if q.is_zero():
        return None
    norm = q.norm()
    if norm <= 1:
        return None
    if max_len is not None and max_len <= 0:
        return None
    found = _walk(spec, bound_sq=norm, max_len=max_len, cap=cap, stop_at=q)
    elem = found.get(q)
    return None if elem is None else elem.word


def log_norm_data(spec, bits):
    """Enclosures of ln|g_i| = ln N(g_i) / 2, each strictly positive."""
    out = []
    for g in spec.generators:
        iv = log_interval(g.norm(), bits + 1)
        out.append(RInterval(iv.lo / 2, iv.hi / 2))
    return out


def naive_word_oracle(spec, max_len, cap=DEFAULT_ELEMENT_CAP):
    """Distinct values of all words of length <= max_len, by plain product expansion.

    Deliberately shares no code with the pruned walk; used to cross-check it.
    Returns dict value -> first word in length-lex order.
    """
    from itertools import product

    seen = {}
    count = 0
    n = len(spec.generators)
    for length in range(1, max_len + 1):
        for word in product(range(n), repeat=length):
            count += 1
            if count > cap:
                raise ResourceLimit(f"oracle exceeded the cap of {cap} words")
            value = spec.generators[word[0]]
            for i in word[1:]:
                value = value * spec.generators[i]
            if value not in seen:
                seen[value] = Word(word)
    return seen


def length_bound_for_norm(spec, bound_sq, bits=64):
    """Longest word length that can still have norm <= bound_sq."""
    logs = log_norm_data(spec, bits)
    smallest = min(iv.lo for iv in logs)
    top = log_interval(AlgebraicReal(bound_sq), bits).hi / 2
    if top < 0:
        return 0
    v = top / smallest
    return int(v.numerator // v.denominator)


__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "EnumeratedElement",
    "EnumerationStats",
    "SemigroupSpec",
    "Validation",
    "Word",
    "canonical_order",
    "enumerate_up_to",
    "enumerate_words",
    "is_commutative",
    "length_bound_for_norm",
    "log_norm_data",
    "membership",
    "naive_word_oracle",
    "validate",
]
