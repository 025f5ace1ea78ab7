"""Contradiction separation deduction over propositional clause sets.

Clauses are lists of nonzero DIMACS-style literal codes: v for the
positive literal of variable v, -v for its negation.
"""

from ._core import (
    DeduceError,
    brute_count,
    brute_force_model,
    count_cn,
    count_msc,
    decide,
    emit_dimacs,
    find_model,
    full_triangle,
    is_quasi_contradiction,
    is_standard_contradiction,
    maximal_contradiction,
    parse_dimacs,
    peel_tail,
    redundancy,
    refute,
    satisfiable_instance,
    sub_delete,
    sub_middle,
    sub_transverse,
    sub_vertical,
    verify,
)

__all__ = [
    "DeduceError",
    "brute_count",
    "brute_force_model",
    "count_cn",
    "count_msc",
    "decide",
    "emit_dimacs",
    "find_model",
    "full_triangle",
    "is_quasi_contradiction",
    "is_standard_contradiction",
    "maximal_contradiction",
    "parse_dimacs",
    "peel_tail",
    "redundancy",
    "refute",
    "satisfiable_instance",
    "sub_delete",
    "sub_middle",
    "sub_transverse",
    "sub_vertical",
    "verify",
]
