"""Solve 3^m - 2^n = 1 and compare against the brute-force oracle.

    python3 scripts/catalan_demo.py --window 30
"""

import argparse
from dataclasses import dataclass

from quatunit.quat import ONE, Quaternion
from quatunit.semigroup import SemigroupSpec
from quatunit.solver import UnitEquationInstance, brute_force_oracle, solve_main


@dataclass
class DemoConfig:
    window: int = 30
    threads: int = 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--window", type=int, default=DemoConfig.window)
    ap.add_argument("--threads", type=int, default=DemoConfig.threads)
    cfg = DemoConfig(**vars(ap.parse_args()))

    inst = UnitEquationInstance(
        ONE, ONE, Quaternion(-1), ONE,
        SemigroupSpec((Quaternion(3),), ("3",)),
        SemigroupSpec((Quaternion(2),), ("2",)),
    )
    res = solve_main(inst, cfg.window, threads=cfg.threads)
    oracle = brute_force_oracle(inst, cfg.window)
    for s in res.solutions:
        m, n = s.f_word.exponents(1)[0], s.g_word.exponents(1)[0]
        print(f"3^{m} - 2^{n} = 1   ({s.f_value.a} - {s.g_value.a})")
    print("certified cap:", res.certificate["certified_H_cap"])
    print("status:", res.completeness_status)
    print("matches oracle:", res.value_pairs() == oracle.value_pairs())


if __name__ == "__main__":
    main()
