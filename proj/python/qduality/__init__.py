"""Exact and multiprecision checks of hypergeometric duality identities."""

from ._core import (
    compositions,
    diagonal_residue_check,
    difference_residue_recursion,
    duality_difference,
    kernel_single_tuple,
    kernel_two_tuple,
    limit_relation_check,
    mixed_residue_check,
    poch_q,
    poch_rational,
    poch_sym,
    pole_pair_map,
    pole_set_membership,
    riemann_check,
    run_suite,
    side_sym_trig,
    subsets,
    theta,
)

__all__ = [
    "compositions",
    "diagonal_residue_check",
    "difference_residue_recursion",
    "duality_difference",
    "kernel_single_tuple",
    "kernel_two_tuple",
    "limit_relation_check",
    "mixed_residue_check",
    "poch_q",
    "poch_rational",
    "poch_sym",
    "pole_pair_map",
    "pole_set_membership",
    "riemann_check",
    "run_suite",
    "side_sym_trig",
    "subsets",
    "theta",
]
