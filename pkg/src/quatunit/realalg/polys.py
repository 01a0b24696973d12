"""Integer polynomial helpers.

Polynomials are tuples of Python ints, lowest degree first: ``(c0, c1, ..., cd)``.
Resultants, factorisation and Sturm counts are delegated to sympy; everything
that runs in inner loops (sign evaluation, shifts, scaling) is done here on
plain integers.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import Poly, Rational, symbols

_t, _y = symbols("t y")


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def primitive(p):
    """Divide out the content and make the leading coefficient positive."""
    p = trim(p)
    g = 0
    for c in p:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("zero polynomial")
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def degree(p):
    return len(p) - 1


def from_fractions(coeffs):
    """Clear denominators of a rational coefficient list."""
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    return primitive([int(Fraction(c) * den) for c in coeffs])


def sign_at(p, q):
    """Sign of p(q) for rational q, evaluated exactly on integers."""
    q = Fraction(q)
    a, b = q.numerator, q.denominator
    acc = 0
    bpow = 1
    # sum c_i a^i b^(d-i), Horner in a with running powers of b
    for c in reversed(p):
        acc = acc * a + c * bpow
        bpow *= b
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


def evaluate(p, q):
    q = Fraction(q)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * q + c
    return acc


def negate_var(p):
    """Polynomial whose roots are the negatives of the roots of p."""
    return primitive([c if i % 2 == 0 else -c for i, c in enumerate(p)])


def reverse(p):
    """Polynomial whose roots are the reciprocals of the (nonzero) roots of p."""
    return primitive(tuple(reversed(trim(p))))


def shift(p, r):
    """Polynomial whose roots are the roots of p plus r (r rational)."""
    r = Fraction(r)
    # q(t) = p(t - r), Horner over Fraction coefficient lists
    out = [Fraction(0)]
    for c in reversed(p):
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i + 1] += v
            nxt[i] -= v * r
        nxt[0] += c
        out = nxt
    return from_fractions(out)


def scale(p, r):
    """Polynomial whose roots are the roots of p times r (r rational, nonzero)."""
    r = Fraction(r)
    a, b = r.numerator, r.denominator
    d = len(p) - 1
    # roots times a/b: p(t*b/a) * a^d  ->  c_i b^i a^(d-i)
    return primitive([c * b**i * a ** (d - i) for i, c in enumerate(p)])


def compose_square(p):
    """p(t^2)."""
    out = [0] * (2 * len(p) - 1)
    for i, c in enumerate(p):
        out[2 * i] = c
    return tuple(out)


def to_sympy(p, var=_t):
    return Poly(list(reversed(p)), var)


def from_sympy(P):
    return primitive([int(c) for c in reversed(P.all_coeffs())])


@lru_cache(maxsize=4096)
def irreducible_factors(p):
    """Distinct irreducible factors of p over the integers (multiplicities dropped)."""
    _, facs = to_sympy(p).factor_list()
    out = []
    for f, _ in facs:
        if f.degree() >= 1:
            out.append(from_sympy(f))
    return tuple(sorted(set(out)))


def count_roots(p, lo, hi):
    """Number of distinct real roots of p in the closed interval [lo, hi]."""
    P = to_sympy(p)
    return P.count_roots(Rational(lo.numerator, lo.denominator), Rational(hi.numerator, hi.denominator))


def resultant_sum(p, q):
    """Polynomial vanishing at every alpha + beta with p(alpha) = q(beta) = 0."""
    P = Poly(sum(c * _y**i for i, c in enumerate(p)), _y, _t)
    Q = Poly(sum(c * (_t - _y) ** i for i, c in enumerate(q)), _y, _t)
    R = P.resultant(Q)
    return from_sympy(Poly(R.as_expr(), _t))


def resultant_product(p, q):
    """Polynomial vanishing at every alpha * beta with p(alpha) = q(beta) = 0 (alpha, beta != 0)."""
    dq = len(q) - 1
    P = Poly(sum(c * _y**i for i, c in enumerate(p)), _y, _t)
    Q = Poly(sum(c * _t**i * _y ** (dq - i) for i, c in enumerate(q)), _y, _t)
    R = P.resultant(Q)
    return from_sympy(Poly(R.as_expr(), _t))


def resultant_complex(p, q):
    """Polynomial vanishing at every x + i*y with p(x) = q(y) = 0."""
    x = symbols("x")
    inner = Poly(sum(c * _y**i for i, c in enumerate(q)), _y, _t, x).resultant(
        Poly((_t - x) ** 2 + _y**2, _y, _t, x)
    )
    outer = Poly(inner.as_expr(), x, _t).resultant(Poly(sum(c * x**i for i, c in enumerate(p)), x, _t))
    return from_sympy(Poly(outer.as_expr(), _t))


def complex_root_boxes(p, eps):
    """Isolating boxes ``((xlo, xhi), (ylo, yhi))`` for every complex root of p.

    Real roots come back as degenerate boxes in the imaginary direction.
    """
    P = to_sympy(p)
    real, cplx = P.intervals(all=True, eps=Rational(eps.numerator, eps.denominator))
    boxes = []
    for (lo, hi), _ in real:
        boxes.append(((_frac(lo), _frac(hi)), (Fraction(0), Fraction(0))))
    for (z0, z1), _ in cplx:
        x0, y0 = z0.as_real_imag()
        x1, y1 = z1.as_real_imag()
        boxes.append(((_frac(x0), _frac(x1)), (_frac(y0), _frac(y1))))
    return boxes


def _frac(r):
    r = Rational(r)
    return Fraction(int(r.p), int(r.q))
