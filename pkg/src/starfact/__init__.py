"""Exact toolkit for transposition factorisations in symmetric groups.

Four families of factorisations (star, monotone, monotone double, double
Hurwitz), constructive bijections between them with step-by-step traces,
Jucys-Murphy expressions in the integer group algebra with a transitivity
operator, and closed formulas with recurrences.  Every count has at least
two independent routes and the :mod:`starfact.verify` suites compare them
exhaustively.
"""

from .algebra import (
    AlgebraElement,
    NotCentralError,
    class_sum,
    e,
    evaluate,
    format_class_decomposition,
    h,
    jm_element,
    jm_var,
    p,
    transitive_evaluate,
    transitive_power,
)
from .bijections import (
    TraceStep,
    centrality_witness,
    delta,
    gamma,
    gamma_inverse,
    lambda_j,
    lambda_j_inverse,
    lambda_order,
    lambda_order_inverse,
    lhm,
    replay,
    reroot,
    rhm,
    theta,
)
from .factorisations import (
    ConditionViolation,
    DoubleHurwitzFactorisation,
    MonotoneDoubleFactorisation,
    MonotoneFactorisation,
    StarFactorisation,
    b_number,
    count_double_hurwitz,
    count_monotone,
    count_monotone_double,
    count_star,
    count_star_unconstrained,
    enumerate_monotone,
    enumerate_monotone_double,
    enumerate_star,
    strictly_monotone_factorisation,
)
from .formulas import (
    RationalSeries,
    b_relation_check,
    base_series,
    catalan,
    central_factorial,
    feray_count,
    md_full_cycle,
    md_identity,
    recurrence_md_identity_check,
    recurrence_star,
    stirling2,
)
from .perms import (
    Partition,
    Permutation,
    TotalOrder,
    Transposition,
    conjugacy_classes,
    conjugating_permutation,
    partitions_of,
    symmetric_group,
)
from .verify import SUITES, CheckResult, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "CheckResult",
    "ConditionViolation",
    "DoubleHurwitzFactorisation",
    "MonotoneDoubleFactorisation",
    "MonotoneFactorisation",
    "NotCentralError",
    "Partition",
    "Permutation",
    "RationalSeries",
    "SUITES",
    "StarFactorisation",
    "SuiteReport",
    "TotalOrder",
    "TraceStep",
    "Transposition",
    "b_number",
    "b_relation_check",
    "base_series",
    "catalan",
    "central_factorial",
    "centrality_witness",
    "class_sum",
    "conjugacy_classes",
    "conjugating_permutation",
    "count_double_hurwitz",
    "count_monotone",
    "count_monotone_double",
    "count_star",
    "count_star_unconstrained",
    "delta",
    "e",
    "enumerate_monotone",
    "enumerate_monotone_double",
    "enumerate_star",
    "evaluate",
    "feray_count",
    "format_class_decomposition",
    "gamma",
    "gamma_inverse",
    "h",
    "jm_element",
    "jm_var",
    "lambda_j",
    "lambda_j_inverse",
    "lambda_order",
    "lambda_order_inverse",
    "lhm",
    "md_full_cycle",
    "md_identity",
    "p",
    "partitions_of",
    "recurrence_md_identity_check",
    "recurrence_star",
    "replay",
    "reroot",
    "rhm",
    "run_suite",
    "stirling2",
    "strictly_monotone_factorisation",
    "symmetric_group",
    "theta",
    "transitive_evaluate",
    "transitive_power",
]
