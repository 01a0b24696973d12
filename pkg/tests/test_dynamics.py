import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatunit import dynamics as dyn
from quatunit.errors import InvalidInput, OffCurve, PreconditionFailed
from quatunit.quat import Quaternion

CURVE = dyn.PrimeCurve(1009, 1, 1)
I_CURVE = dyn.PrimeCurve(1009, 3, 0)  # 1009 = 1 mod 4
W_CURVE = dyn.PrimeCurve(1009, 0, 5)  # 1009 = 1 mod 3
GAUSS = dyn.QuadOrder.from_discriminant(-4)
EISENSTEIN = dyn.QuadOrder.from_discriminant(-3)


def all_points(curve):
    pts = [dyn.INFINITY]
    for x in range(curve.p):
        for y in range(curve.p):
            if (y * y - curve.rhs(x)) % curve.p == 0:
                pts.append((x, y))
    return pts


def repeated(curve, n, P):
    acc = dyn.INFINITY
    for _ in range(n):
        acc = dyn.point_add(curve, acc, P)
    return acc


def test_group_law():
    rng = random.Random(3)
    for _ in range(200):
        P, Q, R = (CURVE.random_point(rng) for _ in range(3))
        left = dyn.point_add(CURVE, dyn.point_add(CURVE, P, Q), R)
        right = dyn.point_add(CURVE, P, dyn.point_add(CURVE, Q, R))
        assert left == right
        assert dyn.point_add(CURVE, P, Q) == dyn.point_add(CURVE, Q, P)
        assert dyn.point_add(CURVE, P, dyn.neg(CURVE, P)) is dyn.INFINITY
    P = CURVE.random_point(rng)
    for n in range(65):
        assert dyn.scalar_mul(CURVE, n, P) == repeated(CURVE, n, P)
    assert dyn.scalar_mul(CURVE, -5, P) == dyn.neg(CURVE, dyn.scalar_mul(CURVE, 5, P))


def test_group_order_kills_points():
    small = dyn.PrimeCurve(101, 2, 3)
    pts = all_points(small)
    for P in pts:
        assert dyn.scalar_mul(small, len(pts), P) is dyn.INFINITY


def test_curve_validation():
    with pytest.raises(InvalidInput):
        dyn.PrimeCurve(1000, 1, 1)
    with pytest.raises(InvalidInput):
        dyn.PrimeCurve(1009, 0, 0)
    with pytest.raises(OffCurve):
        dyn.point_add(CURVE, (0, 0), (0, 1))


def test_second_iterate_example():
    rng = random.Random(5)
    P, R = CURVE.random_point(rng), CURVE.random_point(rng)
    h = dyn.ScalarEndo(2)
    Q = dyn.translation_for(CURVE, h, R)
    g = dyn.AffineDynamic(h, Q)
    four_p = dyn.scalar_mul(CURVE, 4, P)
    assert g.iterate(CURVE, P, 2) == dyn.point_add(CURVE, four_p, dyn.scalar_mul(CURVE, 3, Q))


@pytest.mark.parametrize("m", [2, 3, 5])
def test_translation_identity(m):
    rng = random.Random(m)
    h = dyn.ScalarEndo(m)
    stats = {}
    for _ in range(10):
        R = CURVE.random_point(rng)
        Q = dyn.translation_for(CURVE, h, R)
        assert dyn.verify_translation_identity(CURVE, h, Q, R, 20, 2, rng, stats)
    assert stats["checks"] == 10 * 2 * 20


def test_translation_identity_rejects_wrong_q():
    rng = random.Random(1)
    R = CURVE.random_point(rng)
    h = dyn.ScalarEndo(3)
    Q = dyn.point_add(CURVE, dyn.translation_for(CURVE, h, R), R)
    with pytest.raises(PreconditionFailed):
        dyn.verify_translation_identity(CURVE, h, Q, R, 5)


def test_order_actions_satisfy_relations():
    rng = random.Random(8)
    i = dyn.OrderEndo(GAUSS(0, 1))
    w = dyn.OrderEndo(EISENSTEIN(0, 1))
    for _ in range(20):
        P = I_CURVE.random_point(rng)
        assert i.apply(I_CURVE, i.apply(I_CURVE, P)) == dyn.neg(I_CURVE, P)
        Pw = W_CURVE.random_point(rng)
        w2 = w.apply(W_CURVE, w.apply(W_CURVE, Pw))
        # w^2 - w + 1 = 0
        total = dyn.point_add(W_CURVE, dyn.point_add(W_CURVE, w2, dyn.neg(W_CURVE, w.apply(W_CURVE, Pw))), Pw)
        assert total is dyn.INFINITY
    with pytest.raises(InvalidInput):
        i.apply(CURVE, CURVE.random_point(rng))


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 10**6))
def test_order_action_is_multiplicative(a, b, c, d, seed):
    for curve, order in ((I_CURVE, GAUSS), (W_CURVE, EISENSTEIN)):
        P = curve.random_point(random.Random(seed))
        z, v = order(a, b), order(c, d)
        lhs = dyn.OrderEndo(z * v).apply(curve, P)
        rhs = dyn.OrderEndo(z).apply(curve, dyn.OrderEndo(v).apply(curve, P))
        assert lhs == rhs


def test_translation_identity_for_order_endo():
    rng = random.Random(2)
    h = dyn.OrderEndo(GAUSS(1, 1))
    R = I_CURVE.random_point(rng)
    Q = dyn.translation_for(I_CURVE, h, R)
    assert dyn.verify_translation_identity(I_CURVE, h, Q, R, 15, 5, rng)


def brute_orbits(curve, f, g, A, B, k):
    fa = [f.iterate(curve, A, m) for m in range(1, k + 1)]
    gb = [g.iterate(curve, B, n) for n in range(1, k + 1)]
    return sorted((m + 1, n + 1) for m in range(k) for n in range(k) if fa[m] == gb[n])


def test_orbit_intersection():
    rng = random.Random(4)
    A = CURVE.random_point(rng)
    f = dyn.AffineDynamic(dyn.ScalarEndo(2), CURVE.random_point(rng))
    pairs = dyn.orbit_intersection(CURVE, f, f, A, A, 12)
    assert all((m, m) in pairs for m in range(1, 13))
    assert pairs == brute_orbits(CURVE, f, f, A, A, 12)
    g = dyn.AffineDynamic(dyn.ScalarEndo(3), dyn.INFINITY)
    B = CURVE.random_point(rng)
    assert dyn.orbit_intersection(CURVE, f, g, A, B, 15) == brute_orbits(CURVE, f, g, A, B, 15)
    with pytest.raises(InvalidInput):
        dyn.orbit_intersection(CURVE, f, g, A, B, 0)


@given(st.sampled_from([-3, -4, -7, -8, -15, -20]), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_order_arithmetic_and_embedding(disc, a, b, c, d):
    order = dyn.QuadOrder.from_discriminant(disc)
    z, v = order(a, b), order(c, d)
    assert (z * v).norm() == z.norm() * v.norm()
    assert z * z.conj() == order(z.norm())
    assert z + z.conj() == order(z.trace())
    w = dyn.omega_quaternion(order)
    zq, vq = dyn.embed_element(z, w), dyn.embed_element(v, w)
    assert zq.norm() == z.norm()
    assert zq.trace() == z.trace()
    assert dyn.embed_element(z * v, w) == zq * vq


def test_common_iterate():
    two = GAUSS(2, 0)
    out = dyn.dynamics_to_unit_equation(two, two, 1, 1)
    assert isinstance(out, dyn.CommonIterate)
    u, d = dyn.bridge_constants(two, two, 1, 1)
    assert u.is_zero() and d == 1
    assert dyn.endo_equation_check(two, two, 1, 1, 3, 3).common_iterate


def test_bridge_instance_round_trip():
    f, h = GAUSS(2, 0), GAUSS(1, 1)
    u, d = dyn.bridge_constants(f, h, 1, 1)
    assert not u.is_zero()
    inst = dyn.dynamics_to_unit_equation(f, h, 1, 1)
    inst.validate()
    assert inst.a_p == Quaternion(1, 1) / 2 and inst.b_p == Quaternion(1, -1) / 2
    hq, fq = inst.gamma1.generators[0], inst.gamma2.generators[0]
    assert hq.norm() == h.norm() and hq.trace() == h.trace()
    assert fq.norm() == f.norm() and fq.trace() == f.trace()
    for m in range(1, 6):
        for n in range(1, 6):
            chk = dyn.endo_equation_check(f, h, 1, 1, m, n)
            assert chk.holds == inst.holds(hq ** n, fq ** m)
    assert dyn.endo_equation_check(f, h, 1, 1, 1, 1).holds


def test_bridge_rejects_small_norms():
    with pytest.raises(PreconditionFailed):
        dyn.dynamics_to_unit_equation(GAUSS(1, 0), GAUSS(2, 0), 1, 1)
