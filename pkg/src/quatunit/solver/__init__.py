"""Unit equations in quaternion semigroups: caps, exact search, oracle."""

from .bounds import CapResult, locus_bound, reduction_bound
from .instances import (
    CAP_LIMIT,
    ORACLE_COMPLETE_BELOW_CAP,
    ORACLE_WINDOW_ONLY,
    OVERFLOW,
    CommutativeEmbedding,
    LocusInstance,
    Solution,
    SolutionSet,
    UnitEquationInstance,
    embed_commutative,
    on_hyperplane,
)
from .search import (
    brute_force_oracle,
    hyperplane_test,
    matrix_counterexample,
    solve_locus,
    solve_main,
    solve_reduction,
)

__all__ = [
    "CAP_LIMIT",
    "CapResult",
    "CommutativeEmbedding",
    "LocusInstance",
    "ORACLE_COMPLETE_BELOW_CAP",
    "ORACLE_WINDOW_ONLY",
    "OVERFLOW",
    "Solution",
    "SolutionSet",
    "UnitEquationInstance",
    "brute_force_oracle",
    "embed_commutative",
    "hyperplane_test",
    "locus_bound",
    "matrix_counterexample",
    "on_hyperplane",
    "reduction_bound",
    "solve_locus",
    "solve_main",
    "solve_reduction",
]
