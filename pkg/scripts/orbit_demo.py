"""Orbit coincidences of two affine maps on y^2 = x^3 + x + 1 over F_1009,
plus a spot check of the closed form for iterates of P -> h(P) + Q."""

import argparse
import random
from dataclasses import dataclass

from quatunit import dynamics as dyn


@dataclass
class OrbitConfig:
    p: int = 1009
    max_iter: int = 40
    seed: int = 0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=OrbitConfig.p)
    ap.add_argument("--max-iter", type=int, default=OrbitConfig.max_iter)
    ap.add_argument("--seed", type=int, default=OrbitConfig.seed)
    args = ap.parse_args()
    cfg = OrbitConfig(args.p, args.max_iter, args.seed)

    rng = random.Random(cfg.seed)
    curve = dyn.PrimeCurve(cfg.p, 1, 1)
    R = curve.random_point(rng)
    h = dyn.ScalarEndo(2)
    Q = dyn.translation_for(curve, h, R)
    f = dyn.AffineDynamic(h, Q)
    # g = f o f, so f^(2n)(A) = g^n(A): coincidences from a common iterate
    g = dyn.AffineDynamic(dyn.ScalarEndo(4), dyn.scalar_mul(curve, 3, Q))
    A = B = curve.random_point(rng)

    pairs = dyn.orbit_intersection(curve, f, g, A, B, cfg.max_iter)
    print(f"f = [2] + Q, g = [4] + 3Q; A = B = {A}")
    print(f"{len(pairs)} coincidences f^m(A) = g^n(B) with m, n <= {cfg.max_iter}")
    for m, n in pairs[:10]:
        print(f"  m = {m:3d}  n = {n:3d}")
    stats = {}
    ok = dyn.verify_translation_identity(curve, h, Q, R, 20, 10, rng, stats)
    print(f"closed form for f^n: {stats['checks']} checks, all hold: {ok}")


if __name__ == "__main__":
    main()
