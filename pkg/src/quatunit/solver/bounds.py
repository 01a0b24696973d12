"""Effective exponent caps from linear forms in logarithms.

Off the hyperplane: with X = |a f a'| and Y = |b g b'| the equation forces
0 < |X - Y| <= 1, so the form  c + sum m_i x_i - sum n_j y_j = ln X - ln Y
(c = ln|a a' / b b'|, x_i, y_j the log-norms of the generators) is nonzero and
at most 1 / (X - 1) <= 2 / X once X >= 2.

On the hyperplane (commutative gamma in span(1, u)): <v, f> = M with v a unit
complex number, so |cos(sum n_j theta_j - theta)| = M prod r_j^-n_j and the
form  sum n_j (i theta_j) - (i(pi/2 + theta)) - m (i pi)  is at most
(pi/2) M e^(-min ln r_j * N), using |cos x| >= (2/pi) dist(x, pi/2 + pi Z).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..baker import LogGenerator, explicit_constants, solve_height_cap
from ..quat import inner
from ..literals import quaternion_to_json, real_to_json
from ..realalg import AlgebraicComplex, RInterval, arg_interval, log_interval, pi_interval
from ..realalg.transcend import _lower_positive, ln2_interval
from ..semigroup import log_norm_data
from .instances import CAP_LIMIT, OVERFLOW, embed_commutative

_ENVELOPE_DEN = 1 << 32


def _ceil(q):
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def _floor(q):
    q = Fraction(q)
    return q.numerator // q.denominator


def _down(q):
    return Fraction(_floor(q * _ENVELOPE_DEN), _ENVELOPE_DEN)


def _up(q):
    return Fraction(_ceil(q * _ENVELOPE_DEN), _ENVELOPE_DEN)


def cap_literal(h):
    return h if h <= CAP_LIMIT else OVERFLOW


def _scientific(h):
    s = str(h)
    return f"{s[0]}.{s[1:7] or '0'}e+{len(s) - 1}"


def _iv(x):
    return [str(x.lo), str(x.hi)]


@dataclass
class CapResult:
    """An exponent cap plus everything needed to re-check it."""

    H_cap: int
    baker: object
    intermediates: dict = field(default_factory=dict)

    @property
    def literal(self):
        return cap_literal(self.H_cap)

    def to_dict(self):
        out = {
            "certified_H_cap": self.literal,
            "H_cap_scientific": _scientific(self.H_cap),
            "baker": None if self.baker is None else self.baker.to_dict(),
        }
        if self.literal == OVERFLOW:
            out["H_cap_exact"] = str(self.H_cap)
        out["intermediates"] = self.intermediates
        return out


def _positive_interval(x, bits):
    """Enclosure of x > 0 whose lower end stays positive."""
    return x.refine(_lower_positive(x) / (1 << bits))


def reduction_envelopes(inst, bits=128):
    """Certified constants for the off-hyperplane branch."""
    g1, g2 = inst.gamma1, inst.gamma2
    t, u = len(g1), len(g2)
    xs, ys = log_norm_data(g1, bits), log_norm_data(g2, bits)
    minx_lo = min(x.lo for x in xs)
    maxx_lo, maxx_hi = max(x.lo for x in xs), max(x.hi for x in xs)
    miny_lo, maxy_hi = min(y.lo for y in ys), max(y.hi for y in ys)
    C1 = _down(minx_lo / (2 * u * maxy_hi))
    C2 = _up(2 * t * maxx_hi / miny_lo)
    C2p = max(C2, Fraction(1))
    na = inst.a.norm() * inst.a_p.norm()
    nb = inst.b.norm() * inst.b_p.norm()
    ln_aa = log_interval(na, bits) * Fraction(1, 2)
    ln_bb = log_interval(nb, bits) * Fraction(1, 2)
    ratio = na / nb
    c = log_interval(ratio, bits) * Fraction(1, 2)
    ln2 = ln2_interval(bits + 8)
    return {
        "t": t, "u": u, "xs": xs, "ys": ys,
        "minx_lo": minx_lo, "maxx_lo": maxx_lo, "maxx_hi": maxx_hi, "miny_lo": miny_lo,
        "C1": C1, "C2": C2, "C2_p": C2p,
        "na": na, "nb": nb, "ratio": ratio, "c": c, "ln_aa": ln_aa, "ln_bb": ln_bb, "ln2": ln2,
    }


def g_exponent_bound(env, m):
    """Largest g-exponent compatible with an f of max exponent m (uses only |X - Y| <= 1)."""
    top = env["ln2"].hi + max(env["c"].hi + env["t"] * env["maxx_hi"] * m, -env["ln_bb"].lo)
    return max(_floor(top / env["miny_lo"]), 0)


def reduction_bound(inst, bits=128):
    inst.validate()
    env = reduction_envelopes(inst, bits)
    t, ln2 = env["t"], env["ln2"]

    # beyond m_thr: n <= C2' m and X >= 2
    m_comp = _ceil(max(Fraction(0), (ln2 + env["c"]).hi, (ln2 - env["ln_bb"]).hi) / (t * env["maxx_lo"]))
    m_big = _ceil(max(Fraction(0), (ln2 - env["ln_aa"]).hi) / env["minx_lo"])
    m_thr = max(1, m_comp, m_big)
    h_branch = max(m_thr - 1, g_exponent_bound(env, m_thr - 1)) if m_thr > 1 else 0

    gens = []
    has_c = env["ratio"] != 1
    if has_c:
        gens.append(LogGenerator.real_log(env["ratio"].sqrt(), bits))
    for g in inst.gamma1.generators + inst.gamma2.generators:
        gens.append(LogGenerator.real_log(g.norm().sqrt(), bits))
    cert = explicit_constants(gens, bits=min(bits, 64))

    rate = env["minx_lo"] / env["C2_p"]
    abs_aa = env["na"].sqrt()
    aa_iv = _positive_interval(abs_aa, bits)
    scale = RInterval(2 / aa_iv.hi, 2 / aa_iv.lo)
    h0 = solve_height_cap(cert, RInterval(rate, rate), scale)
    h_cap = max(h0, h_branch + 1)
    inter = {
        "C1": str(env["C1"]),
        "C2": str(env["C2"]),
        "C2_p": str(env["C2_p"]),
        "c": _iv(env["c"]) if has_c else None,
        "constant_term": "included" if has_c else "dropped (|aa'| = |bb'|)",
        "log_norms_gamma1": [_iv(x) for x in env["xs"]],
        "log_norms_gamma2": [_iv(y) for y in env["ys"]],
        "decay_rate": str(rate),
        "decay_scale": _iv(scale),
        "threshold_m": m_thr,
        "H_tail": h0,
        "H_branch": h_branch,
    }
    result = CapResult(h_cap, cert, inter)
    result.env = env
    return result


def _as_point(q):
    return RInterval(q, q)


def locus_bound(linst, bits=128):
    """Cap N with every hyperplane solution f having all exponents < N."""
    linst.validate()
    gamma = linst.gamma
    d = linst.d
    emb = embed_commutative(gamma, min(bits, 64))
    nd = d.norm()
    xs = log_norm_data(gamma, bits)
    minx_lo = min(x.lo for x in xs)

    if emb.real:
        if d.a.is_zero():
            return CapResult(1, None, {"case": "empty: real semigroup, <d, f> = 0"})
        target = abs(nd / (d.a * 2))
        if target <= 1:
            return CapResult(1, None, {"case": "empty: |target| <= 1"})
        n_max = _floor(log_interval(target, bits).hi / minx_lo)
        return CapResult(n_max + 1, None, {"case": "real", "target_abs": real_to_json(target)})

    w = AlgebraicComplex(d.a, inner(d, emb.u))
    if w.is_zero():
        return CapResult(1, None, {"case": "empty: <d, f> vanishes on span(1, u)"})
    w_abs = w.abs()
    v = AlgebraicComplex(w.re / w_abs, w.im / w_abs)
    M = nd / (w_abs * 2)
    theta = arg_interval(v, bits)
    pi = pi_interval(bits + 8)

    gens = [
        LogGenerator.unit_arg(AlgebraicComplex(-v.im, v.re), theta + pi * Fraction(1, 2)),
        LogGenerator.unit_arg(AlgebraicComplex(-1, 0), pi),
    ]
    for z, th in zip(emb.images, emb.theta_intervals):
        r = z.abs()
        gens.append(LogGenerator.unit_arg(AlgebraicComplex(z.re / r, z.im / r), th))
    cert = explicit_constants(gens, bits=min(bits, 64))

    s = len(gamma)
    max_theta = max(th.hi for th in emb.theta_intervals)
    factor = _ceil(s * max_theta / pi.lo + 3)
    M_iv = _positive_interval(M, bits)
    scale = RInterval(pi.lo / 2 * M_iv.lo, pi.hi / 2 * M_iv.hi)
    n_cap = solve_height_cap(cert, _as_point(minx_lo), scale, height_factor=factor)
    inter = {
        "case": "complex",
        "u": quaternion_to_json(emb.u),
        "M": _iv(M_iv),
        "theta": _iv(theta),
        "thetas": [_iv(th) for th in emb.theta_intervals],
        "multiple_of_pi_factor": factor,
        "decay_rate": str(minx_lo),
        "decay_scale": _iv(scale),
    }
    return CapResult(n_cap, cert, inter)


__all__ = ["CapResult", "cap_literal", "g_exponent_bound", "locus_bound", "reduction_bound", "reduction_envelopes"]
