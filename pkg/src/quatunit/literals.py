"""JSON literals for numbers, quaternions, semigroups and instances.

A real is an integer, a string "p/q", or {"minpoly": [c0, c1, ...], "interval":
["lo", "hi"]} (coefficients low degree first).  Reports never use floats.
"""

from fractions import Fraction

from .errors import InvalidInput
from .quat import Quaternion
from .realalg import AlgebraicReal
from .semigroup import SemigroupSpec


def parse_real(obj, path="value"):
    if isinstance(obj, bool):
        raise InvalidInput("booleans are not numbers", path)
    if isinstance(obj, int):
        return AlgebraicReal(obj)
    if isinstance(obj, str):
        try:
            return AlgebraicReal(Fraction(obj.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad rational literal {obj!r}", path) from exc
    if isinstance(obj, dict):
        try:
            poly = [int(c) for c in obj["minpoly"]]
            lo, hi = (Fraction(str(v)) for v in obj["interval"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput("algebraic literal needs integer 'minpoly' and a two-point 'interval'", path) from exc
        try:
            return AlgebraicReal.from_root(poly, lo, hi)
        except InvalidInput as exc:
            raise InvalidInput(str(exc), path) from exc
    raise InvalidInput(f"cannot read a real number from {type(obj).__name__}", path)


def parse_quaternion(obj, path="quaternion"):
    if isinstance(obj, list):
        if len(obj) != 4:
            raise InvalidInput("a quaternion literal has four coordinates", path)
        return Quaternion(*(parse_real(c, f"{path}[{i}]") for i, c in enumerate(obj)))
    return Quaternion(parse_real(obj, path))


def parse_semigroup(obj, path="semigroup"):
    if not isinstance(obj, dict) or "generators" not in obj:
        raise InvalidInput("a semigroup literal is an object with 'generators'", path)
    gens = obj["generators"]
    if not isinstance(gens, list) or not gens:
        raise InvalidInput("need a nonempty generator list", f"{path}.generators")
    generators = tuple(parse_quaternion(g, f"{path}.generators[{i}]") for i, g in enumerate(gens))
    labels = tuple(str(x) for x in obj.get("labels", ()))
    try:
        return SemigroupSpec(generators, labels)
    except InvalidInput as exc:
        exc.path = exc.path or path
        raise


def _field(obj, key, path):
    if key not in obj:
        raise InvalidInput("missing field", f"{path}{key}")
    return obj[key]


def parse_instance(obj):
    from .solver import UnitEquationInstance

    if not isinstance(obj, dict):
        raise InvalidInput("instance must be a JSON object", "$")
    units = {k: parse_quaternion(_field(obj, k, ""), k) for k in ("a", "a_prime", "b", "b_prime")}
    g1 = parse_semigroup(_field(obj, "gamma1", ""), "gamma1")
    g2 = parse_semigroup(_field(obj, "gamma2", ""), "gamma2")
    return UnitEquationInstance(units["a"], units["a_prime"], units["b"], units["b_prime"], g1, g2)


def parse_locus(obj):
    from .solver import LocusInstance

    if not isinstance(obj, dict):
        raise InvalidInput("instance must be a JSON object", "$")
    key = "gamma" if "gamma" in obj else "gamma1"
    a = parse_quaternion(_field(obj, "a", ""), "a")
    a_p = parse_quaternion(_field(obj, "a_prime", ""), "a_prime")
    return LocusInstance(a, a_p, parse_semigroup(_field(obj, key, ""), key))


def real_to_json(x):
    x = AlgebraicReal(x) if not isinstance(x, AlgebraicReal) else x
    if x.is_rational:
        return str(x.as_fraction())
    iv = x.canonical_interval()
    return {"minpoly": list(x.minpoly), "interval": [str(iv.lo), str(iv.hi)]}


def quaternion_to_json(q):
    return [real_to_json(c) for c in q.coords]


def word_to_json(word, spec):
    return {
        "indices": list(word.indices),
        "labels": [spec.labels[i] for i in word.indices],
        "exponents": list(word.exponents(len(spec))),
    }


def semigroup_to_json(spec):
    return {"generators": [quaternion_to_json(g) for g in spec.generators], "labels": list(spec.labels)}


def instance_to_json(inst):
    return {
        "a": quaternion_to_json(inst.a),
        "a_prime": quaternion_to_json(inst.a_p),
        "b": quaternion_to_json(inst.b),
        "b_prime": quaternion_to_json(inst.b_p),
        "gamma1": semigroup_to_json(inst.gamma1),
        "gamma2": semigroup_to_json(inst.gamma2),
    }


def solution_to_json(sol, inst):
    return {
        "f_word": word_to_json(sol.f_word, inst.gamma1),
        "g_word": word_to_json(sol.g_word, inst.gamma2),
        "f_value": quaternion_to_json(sol.f_value),
        "g_value": quaternion_to_json(sol.g_value),
        "max_exponent": sol.max_exponent(),
    }


def solution_set_to_json(result, inst):
    return {
        "solutions": [solution_to_json(s, inst) for s in result.solutions],
        "certificate": result.certificate,
        "completeness_status": result.completeness_status,
    }
