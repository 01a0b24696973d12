from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatunit.errors import DivisionByZero, NegativeOperand, NonPositiveOperand, ZeroOperand
from quatunit.realalg import (
    AlgebraicComplex,
    AlgebraicReal,
    RInterval,
    ar_arith,
    ar_compare,
    ar_sqrt,
    arg_interval,
    log_interval,
    refine,
    weil_height,
)

mpmath.mp.prec = 400

SQRT2 = AlgebraicReal(2).sqrt()
PHI = (AlgebraicReal(5).sqrt() + 1) / 2


def mpf(q):
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def encloses(iv, value):
    return mpf(iv.lo) <= value <= mpf(iv.hi)


def test_rational_canonical_form():
    x = AlgebraicReal(Fraction(6, 4))
    assert x.is_rational and x.minpoly == (-3, 2)


def test_additive_inverse_is_zero():
    assert ar_arith("add", SQRT2, -SQRT2) == 0
    assert ar_arith("add", SQRT2, -SQRT2).is_rational


def test_sqrt2_squared():
    assert ar_arith("mul", SQRT2, SQRT2) == 2


def test_reciprocal_of_golden_ratio():
    assert ar_arith("div", 1, PHI) == PHI - 1
    assert (PHI - 1) * PHI == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ar_arith("div", SQRT2, 0)


def test_sqrt_examples():
    assert ar_sqrt(4) == 2
    assert SQRT2.minpoly == (-2, 0, 1)
    assert 1 <= SQRT2 <= 2
    assert ar_sqrt(3 + 2 * SQRT2) == 1 + SQRT2
    with pytest.raises(NegativeOperand):
        ar_sqrt(-SQRT2)


def test_degree_of_sum_of_square_roots():
    s = SQRT2 + AlgebraicReal(3).sqrt()
    assert s.minpoly == (1, 0, -10, 0, 1)


def test_compare():
    assert ar_compare(SQRT2 * SQRT2, 2) == "EQ"
    assert ar_compare(SQRT2, Fraction(141, 100)) == "GT"
    assert ar_compare(0, 0) == "EQ"
    assert ar_compare(PHI, SQRT2) == "GT"


def test_refine():
    assert refine(2, Fraction(1, 10)) == RInterval(Fraction(2), Fraction(2))
    iv = refine(SQRT2, Fraction(1, 100))
    assert iv.width <= Fraction(1, 100) and encloses(iv, mpmath.sqrt(2))
    assert refine(0, 1) == RInterval(Fraction(0), Fraction(0))


def test_refine_is_independent_of_cache_state():
    a = AlgebraicReal(7).sqrt()
    first = a.refine(Fraction(1, 1000))
    a.refine(Fraction(1, 10**30))
    assert a.refine(Fraction(1, 1000)) == first


def test_log_interval_examples():
    z = log_interval(1, 40)
    assert z.lo <= 0 <= z.hi
    iv = log_interval(2, 64)
    assert iv.width <= Fraction(1, 2**64) and encloses(iv, mpmath.log(2))
    four = log_interval(4, 32)
    two = log_interval(2, 33)
    assert four.intersects(two * 2)
    with pytest.raises(NonPositiveOperand):
        log_interval(-SQRT2, 10)


def test_log_of_irrational():
    iv = log_interval(PHI, 100)
    assert encloses(iv, mpmath.log((1 + mpmath.sqrt(5)) / 2))


def test_arg_interval_examples():
    assert arg_interval(AlgebraicComplex(1, 0), 32).contains(0)
    assert encloses(arg_interval(AlgebraicComplex(0, 1), 32), mpmath.pi / 2)
    assert encloses(arg_interval(AlgebraicComplex(1, 1), 64), mpmath.pi / 4)
    assert encloses(arg_interval(AlgebraicComplex(0, -1), 32), 3 * mpmath.pi / 2)
    assert encloses(arg_interval(AlgebraicComplex(-1, -SQRT2), 80), mpmath.pi + mpmath.atan(mpmath.sqrt(2)))
    with pytest.raises(ZeroOperand):
        arg_interval(AlgebraicComplex(0, 0), 32)


def test_weil_height_examples():
    assert encloses(weil_height(2), mpmath.log(2))
    assert weil_height(1).contains(0)
    assert encloses(weil_height(PHI), mpmath.log((1 + mpmath.sqrt(5)) / 2) / 2)
    assert encloses(weil_height(Fraction(-7, 3)), mpmath.log(7))
    with pytest.raises(ZeroOperand):
        weil_height(0)


def test_weil_height_of_complex_numbers():
    assert encloses(weil_height(AlgebraicComplex(3, 4)), mpmath.log(5))
    unit = AlgebraicComplex(Fraction(3, 5), Fraction(4, 5))
    assert encloses(weil_height(unit), mpmath.log(5) / 2)
    zeta8 = AlgebraicComplex(SQRT2 / 2, SQRT2 / 2)
    assert zeta8.minpoly() == (1, 0, 0, 0, 1)
    assert weil_height(zeta8).lo <= 0 <= weil_height(zeta8).hi + Fraction(1, 2**20)


small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)
positive_rationals = st.fractions(min_value=Fraction(1, 30), max_value=30, max_denominator=30)


@st.composite
def quadratic_reals(draw):
    """p + q sqrt(r) with small rationals and a non-square r."""
    p, q = draw(small_rationals), draw(small_rationals)
    r = draw(st.sampled_from([2, 3, 5, 6, 7]))
    return AlgebraicReal(p) + AlgebraicReal(q) * AlgebraicReal(r).sqrt(), (p, q, r)


def mp_value(desc):
    p, q, r = desc
    return mpf(p) + mpf(q) * mpmath.sqrt(r)


@given(quadratic_reals(), quadratic_reals(), st.sampled_from(["add", "sub", "mul", "div"]))
def test_containment_consistency(xd, yd, op):
    (x, dx), (y, dy) = xd, yd
    if op == "div" and y.is_zero():
        return
    z = ar_arith(op, x, y)
    a, b = mp_value(dx), mp_value(dy)
    expect = {"add": lambda: a + b, "sub": lambda: a - b, "mul": lambda: a * b, "div": lambda: a / b}[op]()
    iv = z.refine(Fraction(1, 2**60))
    slack = mpmath.mpf(2) ** -300
    assert mpf(iv.lo) - slack <= expect <= mpf(iv.hi) + slack


@given(quadratic_reals(), quadratic_reals())
def test_compare_agrees_with_interval_order(xd, yd):
    (x, _), (y, _) = xd, yd
    ix, iy = x.refine(Fraction(1, 2**20)), y.refine(Fraction(1, 2**20))
    if ix.hi < iy.lo:
        assert x.compare(y) == -1
    elif iy.hi < ix.lo:
        assert x.compare(y) == 1
    assert x.compare(y) == -y.compare(x)


@given(quadratic_reals())
def test_sqrt_squares_back(xd):
    x, _ = xd
    x = abs(x)
    r = ar_sqrt(x)
    assert r >= 0 and r * r == x


@given(positive_rationals, positive_rationals)
def test_log_additivity(x, y):
    lhs = log_interval(x * y, 50)
    rhs = log_interval(x, 51) + log_interval(y, 51)
    assert lhs.intersects(rhs)


@given(st.integers(2, 30), st.integers(1, 10))
def test_height_of_powers_scales(q, n):
    h1 = weil_height(Fraction(q, q + 1))
    hn = weil_height(Fraction(q, q + 1) ** n)
    assert (h1 * n).intersects(hn)
