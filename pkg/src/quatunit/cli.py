"""Command-line entry point.

Exit codes: 0 success, 1 invalid input, 2 resource limit, 3 precision failure.
Reports are JSON with sorted keys; the thread count is deliberately left out of
the echoed config so reports are byte-identical across thread counts.
"""

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass

from .errors import InvalidInput, PrecisionFailure, ResourceLimit
from .literals import (
    instance_to_json,
    parse_instance,
    parse_locus,
    parse_semigroup,
    quaternion_to_json,
    real_to_json,
    semigroup_to_json,
    solution_set_to_json,
    word_to_json,
)
from .semigroup import DEFAULT_ELEMENT_CAP, enumerate_up_to, enumerate_words, is_commutative

SUBCOMMANDS = ("solve", "reduce", "locus", "oracle", "enumerate", "bound", "dynamics", "matrix-demo")


@dataclass
class RunConfig:
    subcommand: str
    input_path: str | None = None
    oracle_len: int = 12
    precision_bits: int = 128
    element_cap: int = DEFAULT_ELEMENT_CAP
    output_path: str | None = None
    thread_count: int = 1
    quiet: bool = False
    bound_sq: str | None = None
    n_max: int | None = None

    def validate(self):
        if self.oracle_len < 0:
            raise InvalidInput("must be >= 0", "--oracle-len")
        if self.precision_bits < 32:
            raise InvalidInput("must be >= 32", "--precision-bits")
        if self.element_cap < 1:
            raise InvalidInput("must be >= 1", "--element-cap")
        if self.thread_count < 1:
            raise InvalidInput("must be >= 1", "--threads")
        return self

    def echo(self):
        out = asdict(self)
        for key in ("thread_count", "output_path", "quiet"):
            out.pop(key)
        return out


def _parser():
    p = argparse.ArgumentParser(prog="quatunit", description="Unit equations in quaternion semigroups.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--input")
        s.add_argument("--oracle-len", type=int, default=12)
        s.add_argument("--precision-bits", type=int, default=128)
        s.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
        s.add_argument("--output")
        s.add_argument("--threads", type=int)
        s.add_argument("--quiet", action="store_true")
        if name == "enumerate":
            s.add_argument("--bound-sq", help="list elements with N(f) <= this rational; default: by word length")
        if name == "matrix-demo":
            s.add_argument("--n-max", type=int, default=5)
    return p


def _threads(arg):
    if arg is not None:
        return arg
    env = os.environ.get("QUATUNIT_THREADS")
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError as exc:
        raise InvalidInput(f"not an integer: {env!r}", "QUATUNIT_THREADS") from exc


def _load(cfg):
    if not cfg.input_path:
        raise InvalidInput("this subcommand needs an input file", "--input")
    try:
        with open(cfg.input_path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(str(exc), "--input") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}", "--input") from exc


# -- subcommands ----------------------------------------------------------


def _solver_report(cfg, fn_name):
    from . import solver

    inst = parse_instance(_load(cfg)).validate()
    bits, window = cfg.precision_bits, cfg.oracle_len
    if fn_name == "oracle":
        result = solver.brute_force_oracle(inst, window, cfg.element_cap)
    elif fn_name == "reduce":
        result = solver.solve_reduction(inst, window, bits, cfg.thread_count, cfg.element_cap)
    else:
        result = solver.solve_main(inst, window, bits, cfg.thread_count, cfg.element_cap)
    report = solution_set_to_json(result, inst)
    report["instance"] = instance_to_json(inst)
    return report, f"{len(result.solutions)} solution(s)"


def _locus(cfg):
    from .solver import solve_locus

    linst = parse_locus(_load(cfg))
    hits, cap = solve_locus(linst, cfg.oracle_len, cfg.precision_bits, cfg.element_cap)
    report = {
        "solutions": [{"f_word": word_to_json(w, linst.gamma), "f_value": quaternion_to_json(v)} for w, v in hits],
        "certificate": cap.to_dict(),
        "d": quaternion_to_json(linst.d),
    }
    return report, f"{len(hits)} hyperplane point(s)"


def _bound(cfg):
    from .solver import reduction_bound

    inst = parse_instance(_load(cfg)).validate()
    red = reduction_bound(inst, cfg.precision_bits)
    report = {"reduction": red.to_dict(), "instance": instance_to_json(inst)}
    if is_commutative(inst.gamma1):
        from .solver import locus_bound

        report["locus"] = locus_bound(inst.locus(), cfg.precision_bits).to_dict()
    return report, f"cap {red.literal}"


def _enumerate(cfg):
    data = _load(cfg)
    spec = parse_semigroup(data.get("gamma", data) if isinstance(data, dict) else data)
    if cfg.bound_sq is not None:
        from .literals import parse_real

        elems = enumerate_up_to(spec, parse_real(cfg.bound_sq, "--bound-sq"), cap=cfg.element_cap)
    else:
        elems = enumerate_words(spec, cfg.oracle_len, cap=cfg.element_cap)
    report = {
        "semigroup": semigroup_to_json(spec),
        "elements": [
            {
                "value": quaternion_to_json(e.value),
                "norm": real_to_json(e.abs_sq),
                "witnesses": [word_to_json(w, spec) for w in e.witnesses],
            }
            for e in elems
        ],
    }
    return report, f"{len(elems)} element(s)"


def _point(obj, path):
    if obj is None:
        return None
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(c, int) for c in obj)):
        raise InvalidInput("a point is [x, y] or null", path)
    return tuple(obj)


def _endo(obj, curve_or_order, path):
    from .dynamics import OrderEndo, QuadOrder, ScalarEndo

    if not isinstance(obj, dict) or obj.get("type") not in ("scalar", "order"):
        raise InvalidInput("endomorphism is {'type': 'scalar'|'order', ...}", path)
    try:
        if obj["type"] == "scalar":
            return ScalarEndo(int(obj["m"]))
        order = QuadOrder.from_discriminant(int(obj["disc"]))
        return OrderEndo(order(int(obj["x"]), int(obj["y"])))
    except KeyError as exc:
        raise InvalidInput(f"missing {exc}", path) from exc


def _order_elem(obj, order, path):
    if not (isinstance(obj, list) and len(obj) == 2):
        raise InvalidInput("order element is [x, y]", path)
    return order(int(obj[0]), int(obj[1]))


def _dynamics(cfg):
    from . import dynamics as dyn

    data = _load(cfg)
    if not isinstance(data, dict) or "op" not in data:
        raise InvalidInput("dynamics input needs an 'op'", "op")
    op = data["op"]
    if op in ("identity", "orbit"):
        try:
            c = data["curve"]
            curve = dyn.PrimeCurve(int(c["p"]), int(c["a4"]), int(c["a6"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput("curve is {'p', 'a4', 'a6'}", "curve") from exc
    if op == "identity":
        rng = random.Random(int(data.get("seed", 0)))
        h = _endo(data.get("h"), curve, "h")
        n_max, trials = int(data.get("n_max", 20)), int(data.get("trials", 50))
        stats = {}
        ok = True
        for _ in range(trials):
            R = curve.random_point(rng)
            Q = dyn.translation_for(curve, h, R)
            ok &= dyn.verify_translation_identity(curve, h, Q, R, n_max, 1, rng, stats)
        return {"op": op, "checks": stats.get("checks", 0), "all_hold": ok}, f"identity holds: {ok}"
    if op == "orbit":
        maps = []
        for key in ("f", "g"):
            m = data.get(key) or {}
            maps.append(dyn.AffineDynamic(_endo(m.get("h"), curve, f"{key}.h"), _point(m.get("q"), f"{key}.q")))
        A, B = _point(data.get("A"), "A"), _point(data.get("B"), "B")
        pairs = dyn.orbit_intersection(curve, maps[0], maps[1], A, B, int(data.get("max_iter", 50)))
        return {"op": op, "pairs": [list(p) for p in pairs]}, f"{len(pairs)} coincidence(s)"
    if op in ("bridge", "endo"):
        order = dyn.QuadOrder.from_discriminant(int(data.get("disc", -4)))
        f = _order_elem(data.get("f"), order, "f")
        h = _order_elem(data.get("h"), order, "h")
        m0, n0 = int(data.get("m0", 1)), int(data.get("n0", 1))
        u, d = dyn.bridge_constants(f, h, m0, n0)
        report = {"op": op, "u": [u.x, u.y], "d": d}
        if op == "endo":
            chk = dyn.endo_equation_check(f, h, m0, n0, int(data["m"]), int(data["n"]))
            report.update(holds=chk.holds, common_iterate=chk.common_iterate)
            return report, f"holds: {chk.holds}"
        out = dyn.dynamics_to_unit_equation(f, h, m0, n0)
        if isinstance(out, dyn.CommonIterate):
            report["verdict"] = "COMMON_ITERATE"
            return report, "common iterate"
        from .solver import solve_main

        result = solve_main(out, cfg.oracle_len, cfg.precision_bits, cfg.thread_count, cfg.element_cap)
        report["verdict"] = "UNIT_EQUATION"
        report["instance"] = instance_to_json(out)
        report["solve"] = solution_set_to_json(result, out)
        return report, f"unit equation, {len(result.solutions)} solution(s)"
    raise InvalidInput(f"unknown op {op!r}", "op")


def _matrix(cfg):
    from .solver import matrix_counterexample

    if cfg.n_max < 1:
        raise InvalidInput("must be >= 1", "--n-max")
    pairs = matrix_counterexample(cfg.n_max)

    def m(x):
        return [[str(v) for v in row] for row in x]

    report = {
        "pairs": [{"n": p["n"], "f": m(p["f"]), "g": m(p["g"]), "verified": p["verified"]} for p in pairs],
        "all_verified": all(p["verified"] for p in pairs),
    }
    return report, f"{sum(p['verified'] for p in pairs)}/{len(pairs)} pairs verified"


_DISPATCH = {
    "solve": lambda cfg: _solver_report(cfg, "solve"),
    "reduce": lambda cfg: _solver_report(cfg, "reduce"),
    "oracle": lambda cfg: _solver_report(cfg, "oracle"),
    "locus": _locus,
    "bound": _bound,
    "enumerate": _enumerate,
    "dynamics": _dynamics,
    "matrix-demo": _matrix,
}


def render(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(argv=None):
    args = _parser().parse_args(argv)
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            input_path=args.input,
            oracle_len=args.oracle_len,
            precision_bits=args.precision_bits,
            element_cap=args.element_cap,
            output_path=args.output,
            thread_count=_threads(args.threads),
            quiet=args.quiet,
            bound_sq=getattr(args, "bound_sq", None),
            n_max=getattr(args, "n_max", None),
        ).validate()
        report, summary = _DISPATCH[cfg.subcommand](cfg)
    except InvalidInput as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 1
    except ResourceLimit as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return 2
    except PrecisionFailure as exc:
        print(f"error: precision failure: {exc}", file=sys.stderr)
        return 3
    report["config"] = cfg.echo()
    text = render(report)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not cfg.quiet:
        print(f"{cfg.subcommand}: {summary}", file=sys.stderr)
    return 0


def main():
    sys.exit(run())
