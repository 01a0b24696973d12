"""Check explicit linear-form lower bounds against high-precision evaluations.

For every nonempty subset of the chosen logarithms, sweep all integer vectors
with max |b_i| <= H and count violations of |sum b_i ln(alpha_i)| > lower_bound.
"""

import argparse
import itertools
import time
from dataclasses import dataclass

import mpmath

from quatunit.baker import LogGenerator, explicit_constants, lower_bound
from quatunit.realalg import AlgebraicReal


@dataclass
class SweepConfig:
    height: int = 20
    max_r: int = 3
    bits: int = 310


def alphas():
    phi = (AlgebraicReal(5).sqrt() + 1) / 2
    return {
        "2": (AlgebraicReal(2), mpmath.log(2)),
        "3": (AlgebraicReal(3), mpmath.log(3)),
        "5": (AlgebraicReal(5), mpmath.log(5)),
        "phi": (phi, mpmath.log(mpmath.phi)),
    }


def sweep(cfg):
    mpmath.mp.prec = cfg.bits + 40
    table = alphas()
    scale = mpmath.mpf(2) ** cfg.bits
    fixed = {k: int(mpmath.floor(v * scale)) for k, (_, v) in table.items()}
    rows = []
    for r in range(1, cfg.max_r + 1):
        for sub in itertools.combinations(table, r):
            cert = explicit_constants([LogGenerator.real_log(table[k][0]) for k in sub])
            need = [None] + [lower_bound(cert, h).floor_scaled(cfg.bits) + 1 for h in range(1, cfg.height + 1)]
            logs = [fixed[k] for k in sub]
            checks = bad = 0
            for vec in itertools.product(range(-cfg.height, cfg.height + 1), repeat=r):
                h = max(map(abs, vec))
                if h == 0:
                    continue
                s = abs(sum(c * l for c, l in zip(vec, logs)))
                err = sum(map(abs, vec))
                if s <= err:
                    continue
                checks += 1
                bad += s - err < need[h]
            rows.append((sub, cert, checks, bad))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--height", type=int, default=SweepConfig.height)
    ap.add_argument("--max-r", type=int, default=SweepConfig.max_r)
    ap.add_argument("--bits", type=int, default=SweepConfig.bits)
    args = ap.parse_args()
    cfg = SweepConfig(args.height, args.max_r, args.bits)
    start = time.perf_counter()
    for sub, cert, checks, bad in sweep(cfg):
        print(f"{'+'.join(sub):12s} C ~ {float(cert.C):.3e}  checks {checks:8d}  violations {bad}")
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
