"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

from oracles import direct_hyperplane, hyperplane_case
from quatunit import cli
from quatunit import dynamics as dyn
from quatunit.baker import LogGenerator, explicit_constants, lower_bound
from quatunit.quat import ONE, Quaternion
from quatunit.realalg import AlgebraicReal
from quatunit.semigroup import SemigroupSpec, enumerate_up_to, naive_word_oracle
from quatunit.solver import (
    OVERFLOW,
    LocusInstance,
    UnitEquationInstance,
    brute_force_oracle,
    hyperplane_test,
    reduction_bound,
    solve_main,
)

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


@pytest.fixture
def report(capsys):
    """Print one PASS/FAIL line for a criterion, straight to the terminal."""

    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return emit


def spec(*gens):
    return SemigroupSpec(tuple(Quaternion(*g) for g in gens))


def catalan():
    return UnitEquationInstance(ONE, ONE, Quaternion(-1), ONE, spec((3,)), spec((2,)))


def mixed():
    return UnitEquationInstance(ONE, ONE, ONE, ONE, spec((1, 1)), spec((1, 0, 1), (1, 0, 0, 1)))


def test_criterion_01_catalan(report):
    start = time.perf_counter()
    res = solve_main(catalan(), 30)
    elapsed = time.perf_counter() - start
    oracle = brute_force_oracle(catalan(), 30)
    want = {(Quaternion(3), Quaternion(2)), (Quaternion(9), Quaternion(8))}
    exps = sorted((s.f_word.exponents(1)[0], s.g_word.exponents(1)[0]) for s in res.solutions)
    ok = res.value_pairs() == want == oracle.value_pairs() and exps == [(1, 1), (2, 3)] and elapsed < 10
    report(1, ok, f"{len(res.solutions)} solutions, exponents {exps}, {elapsed:.2f}s")


def test_criterion_02_quaternion_oracle(report):
    start = time.perf_counter()
    res = solve_main(mixed(), 8)
    elapsed = time.perf_counter() - start
    oracle = brute_force_oracle(mixed(), 8)
    ok = res.value_pairs() == oracle.value_pairs() and elapsed < 120
    report(2, ok, f"solve {len(res.solutions)} vs oracle {len(oracle.solutions)}, {elapsed:.2f}s")


def test_criterion_03_norm_and_quadratic(report):
    rng = random.Random(2024)

    def rand_q():
        return Quaternion(*(Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(4)))

    failures = 0
    for _ in range(1000):
        x, y = rand_q(), rand_q()
        failures += (x * y).norm() != x.norm() * y.norm()
        failures += x * x - x * x.trace() + Quaternion(x.norm()) != Quaternion(0)
    report(3, failures == 0, f"{failures} failures over 1000 quaternions")


def test_criterion_04_hyperplane(report):
    rng = random.Random(404)
    disagreements = on = 0
    spec2 = spec((2,))
    for _ in range(500):
        a, ap, f = hyperplane_case(rng)
        got = hyperplane_test(LocusInstance(Quaternion(*a), Quaternion(*ap), spec2), Quaternion(*f))
        disagreements += got != direct_hyperplane(a, ap, f)
        on += got
    report(4, disagreements == 0 and on > 0, f"{disagreements} disagreements, {on} of 500 on the hyperplane")


def test_criterion_05_enumeration(report):
    gamma = spec((1, 1), (1, 0, 1))
    oracle = naive_word_oracle(gamma, 8)
    counts, nested, prev = [], True, set()
    for bound in (4, 16, 64, 256):
        got = {e.value for e in enumerate_up_to(gamma, AlgebraicReal(bound))}
        expected = {v for v in oracle if v.norm() <= bound}
        nested &= prev <= got and got == expected
        prev = got
        counts.append(len(got))
    ok = nested and counts[-1] == len(oracle)
    report(5, ok, f"counts {counts}, oracle {len(oracle)}")


PREC = 310
PHI = (AlgebraicReal(5).sqrt() + 1) / 2


def _fixed_logs():
    mpmath.mp.prec = PREC + 40
    scale = mpmath.mpf(2) ** PREC
    vals = {"2": mpmath.log(2), "3": mpmath.log(3), "5": mpmath.log(5), "phi": mpmath.log(mpmath.phi)}
    return {k: int(mpmath.floor(v * scale)) for k, v in vals.items()}


def test_criterion_06_baker_sweep(report):
    start = time.perf_counter()
    alphas = {"2": AlgebraicReal(2), "3": AlgebraicReal(3), "5": AlgebraicReal(5), "phi": PHI}
    fixed = _fixed_logs()  # ln(alpha) * 2^PREC lies in [L, L + 1)
    keys = list(alphas)
    subsets = [(k,) for k in keys]
    subsets += [(a, b) for i, a in enumerate(keys) for b in keys[i + 1:]]
    subsets += [tuple(k for k in keys if k != skip) for skip in keys]
    checks = violations = 0
    rng_c = range(-40, 41)
    for sub in subsets:
        cert = explicit_constants([LogGenerator.real_log(alphas[k]) for k in sub])
        # |Lambda| > bound is implied by |S| - err >= floor(bound * 2^PREC) + 1
        need = [None] + [lower_bound(cert, h).floor_scaled(PREC) + 1 for h in range(1, 41)]
        L = [fixed[k] for k in sub]
        if len(sub) == 1:
            vecs = ((c,) for c in rng_c)
        elif len(sub) == 2:
            vecs = ((c1, c2) for c1 in rng_c for c2 in rng_c)
        else:
            vecs = ((c1, c2, c3) for c1 in rng_c for c2 in rng_c for c3 in rng_c)
        for vec in vecs:
            H = max(abs(c) for c in vec)
            if H == 0:
                continue
            S = abs(sum(c * l for c, l in zip(vec, L)))
            err = sum(abs(c) for c in vec)
            if S <= err:
                continue  # the enclosure does not exclude zero
            checks += 1
            if S - err < need[H]:
                violations += 1
    elapsed = time.perf_counter() - start
    ok = violations == 0 and checks >= 10**4 and elapsed < 300
    report(6, ok, f"{checks} checks over {len(subsets)} certificates, {violations} violations, {elapsed:.1f}s")


def test_criterion_07_certificate_consistency(report):
    details, ok = [], True
    for name, inst, window in (("catalan", catalan(), 30), ("quaternion", mixed(), 8)):
        res = solve_main(inst, window)
        cap = res.certificate["certified_H_cap"]
        C = res.certificate["baker"]["C"]
        ok &= isinstance(C, str) and Fraction(C) == reduction_bound(inst).baker.C
        oracle = brute_force_oracle(inst, window)
        if cap == OVERFLOW:
            ok &= str(Fraction(C)) == C
        else:
            ok &= all(s.max_exponent() < cap for s in oracle.solutions)
        details.append(f"{name}: cap {cap}, {len(oracle.solutions)} oracle solutions")
    rep = json.loads(_cli_text(["bound", "--input", str(INSTANCES / "catalan.json")]))
    ok &= Fraction(rep["reduction"]["baker"]["C"]) == reduction_bound(catalan()).baker.C
    report(7, ok, "; ".join(details))


def test_criterion_08_dynamics_identity(report):
    curve = dyn.PrimeCurve(1009, 1, 1)
    rng = random.Random(88)
    stats, ok = {}, True
    for m in (2, 3):
        h = dyn.ScalarEndo(m)
        for _ in range(50):
            R = curve.random_point(rng)
            Q = dyn.translation_for(curve, h, R)
            ok &= dyn.verify_translation_identity(curve, h, Q, R, 20, 1, rng, stats)
    ok &= stats["checks"] == 2000
    report(8, ok, f"{stats['checks']} checks")


def test_criterion_09_bridge(report):
    gauss = dyn.QuadOrder.from_discriminant(-4)
    two, one_i = gauss(2, 0), gauss(1, 1)
    common = dyn.dynamics_to_unit_equation(two, two, 1, 1)
    u0, _ = dyn.bridge_constants(two, two, 1, 1)
    ok = isinstance(common, dyn.CommonIterate) and u0.is_zero()
    u, _ = dyn.bridge_constants(two, one_i, 1, 1)
    inst = dyn.dynamics_to_unit_equation(two, one_i, 1, 1)
    ok &= not u.is_zero() and isinstance(inst, UnitEquationInstance)
    inst.validate()
    res = solve_main(inst, 10)
    oracle = brute_force_oracle(inst, 10)
    ok &= res.value_pairs() == oracle.value_pairs()
    report(9, ok, f"u = {u}, {len(res.solutions)} solution(s), oracle {len(oracle.solutions)}")


def _cli_text(argv):
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.run(argv + ["--quiet"])
    assert code == 0
    return buf.getvalue()


def test_criterion_10_matrix(report):
    rep = json.loads(_cli_text(["matrix-demo", "--n-max", "100"]))
    ok = rep["all_verified"] and len(rep["pairs"]) == 100 and all(p["verified"] for p in rep["pairs"])
    report(10, ok, f"{sum(p['verified'] for p in rep['pairs'])}/100 verified")


def test_criterion_11_determinism(report):
    path = str(INSTANCES / "catalan.json")
    texts = [_cli_text(["solve", "--input", path, "--oracle-len", "30", "--threads", str(t)]) for t in (1, 2, 8)]
    ok = texts[0] == texts[1] == texts[2]
    report(11, ok, f"{len(texts[0])} bytes, identical across 1/2/8 threads: {ok}")
