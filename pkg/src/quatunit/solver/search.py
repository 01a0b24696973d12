"""Exact search below the oracle window, with certificates attached."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from ..errors import InvalidInput, NotCommutative
from ..quat import ONE
from ..semigroup import DEFAULT_ELEMENT_CAP, enumerate_words, is_commutative, membership, naive_word_oracle
from .bounds import cap_literal, g_exponent_bound, locus_bound, reduction_bound
from .instances import (
    ORACLE_COMPLETE_BELOW_CAP,
    ORACLE_WINDOW_ONLY,
    OVERFLOW,
    Solution,
    SolutionSet,
    on_hyperplane,
    sort_solutions,
)


def _map(fn, items, threads):
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def hyperplane_test(linst, f):
    if f.is_zero():
        raise InvalidInput("hyperplane test needs f != 0")
    return on_hyperplane(linst.d, f)


def _status(cap, inst, window):
    longest = (cap - 1) * max(len(inst.gamma1), len(inst.gamma2))
    return ORACLE_COMPLETE_BELOW_CAP if longest <= window else ORACLE_WINDOW_ONLY


def _completer(inst, window, cap):
    """Map an f to its Solution when the forced g lies in gamma2 within the window."""

    def complete(elem):
        f = elem.value
        g = inst.g_for(f)
        if g.is_zero():
            return None
        word = membership(inst.gamma2, g, max_len=window, cap=cap)
        if word is None:
            return None
        return Solution(elem.word, word, f, g)

    return complete


def _certificate(red, window, total_cap, locus=None):
    env = red.env
    cert = {
        "certified_H_cap": cap_literal(total_cap),
        "baker": red.baker.to_dict(),
        "comparability": {"C1": str(env["C1"]), "C2": str(env["C2"]), "C2_p": str(env["C2_p"])},
        "oracle_window": {"max_word_len": window},
        "reduction": red.to_dict(),
    }
    if cert["certified_H_cap"] == OVERFLOW:
        cert["H_cap_exact"] = str(total_cap)
    if locus is not None:
        cert["locus"] = locus.to_dict()
    return cert


def solve_reduction(inst, oracle_len, bits=128, threads=1, element_cap=DEFAULT_ELEMENT_CAP):
    """Solutions off the hyperplane with both words of length <= oracle_len."""
    inst.validate()
    if oracle_len < 0:
        raise InvalidInput("oracle window must be >= 0", "oracle_len")
    red = reduction_bound(inst, bits)
    d = inst.a.inverse() * inst.a_p.inverse()
    candidates = [] if oracle_len == 0 else enumerate_words(inst.gamma1, oracle_len, cap=element_cap)
    candidates = [e for e in candidates if not on_hyperplane(d, e.value)]
    found = [s for s in _map(_completer(inst, oracle_len, element_cap), candidates, threads) if s is not None]
    sols = sort_solutions(_verified(inst, found))
    out = SolutionSet(sols, _certificate(red, oracle_len, red.H_cap), _status(red.H_cap, inst, oracle_len))
    out.extra["reduction"] = red
    return out


def solve_locus(linst, oracle_len, bits=128, element_cap=DEFAULT_ELEMENT_CAP):
    """Hyperplane points of a commutative gamma with word length <= oracle_len.

    Returns (list of (word, value), CapResult).
    """
    linst.validate()
    cap = locus_bound(linst, bits)
    d = linst.d
    elems = [] if oracle_len == 0 else enumerate_words(linst.gamma, oracle_len, cap=element_cap)
    hits = [(e.word, e.value) for e in elems if on_hyperplane(d, e.value)]
    return hits, cap


def _verified(inst, sols):
    for s in sols:
        if not inst.holds(s.f_value, s.g_value):
            raise AssertionError("emitted pair fails the equation")
        if s.f_word.evaluate(inst.gamma1) != s.f_value or s.g_word.evaluate(inst.gamma2) != s.g_value:
            raise AssertionError("witness word does not evaluate to its value")
    return sols


def solve_main(inst, oracle_len, bits=128, threads=1, element_cap=DEFAULT_ELEMENT_CAP):
    """All solutions in the window: off-hyperplane via the reduction, on it via the locus."""
    inst.validate()
    if not is_commutative(inst.gamma1):
        raise NotCommutative("gamma1 must be commutative", path="gamma1")
    reduced = solve_reduction(inst, oracle_len, bits, threads, element_cap)
    hits, loc = solve_locus(inst.locus(), oracle_len, bits, element_cap)

    class _Elem:
        def __init__(self, word, value):
            self.word, self.value = word, value

    complete = _completer(inst, oracle_len, element_cap)
    extra = [s for s in _map(complete, [_Elem(w, v) for w, v in hits], threads) if s is not None]
    merged = {(s.f_value, s.g_value): s for s in reduced.solutions}
    for s in extra:
        merged.setdefault((s.f_value, s.g_value), s)
    sols = sort_solutions(_verified(inst, list(merged.values())))

    red = reduced.extra["reduction"]
    n = loc.H_cap
    locus_total = max(n - 1, g_exponent_bound(red.env, n - 1)) + 1 if n > 1 else 0
    total = max(red.H_cap, locus_total)
    cert = _certificate(red, oracle_len, total, loc)
    return SolutionSet(sols, cert, _status(total, inst, oracle_len))


def brute_force_oracle(inst, max_len, element_cap=DEFAULT_ELEMENT_CAP):
    """Every pair of words of length <= max_len solving the equation, by plain double enumeration."""
    inst.validate()
    if max_len <= 0:
        return SolutionSet([], None, ORACLE_WINDOW_ONLY)
    fs = naive_word_oracle(inst.gamma1, max_len, element_cap)
    gs = naive_word_oracle(inst.gamma2, max_len, element_cap)
    sols = []
    for f, fw in fs.items():
        left = inst.a * f * inst.a_p
        for g, gw in gs.items():
            if left + inst.b * g * inst.b_p == ONE:
                sols.append(Solution(fw, gw, f, g))
    return SolutionSet(sort_solutions(sols), None, ORACLE_WINDOW_ONLY)


def _mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def matrix_counterexample(n_max):
    """Pairs f = [[1, n], [0, 1]], g = f^2 with 2f - g = identity, checked exactly."""
    if n_max < 1:
        raise InvalidInput("n_max must be >= 1", "n_max")
    one = Fraction(1)
    identity = ((one, 0 * one), (0 * one, one))
    out = []
    for n in range(1, n_max + 1):
        f = ((one, Fraction(n)), (0 * one, one))
        g = _mat_mul(f, f)
        lhs = tuple(tuple(2 * f[i][j] - g[i][j] for j in range(2)) for i in range(2))
        out.append({"n": n, "f": f, "g": g, "verified": lhs == identity})
    return out
