"""Exact computations deciding p-torsion in Map_k(S^2, BPU(n))."""

from ._gauge_torsion import (
    ContradictionError,
    DomainError,
    PreconditionError,
    StructuralError,
    binom_mod,
    build_A,
    build_B,
    build_D,
    decide_global,
    decide_p,
    derive_recurrence,
    lift_power_sum,
    order_of_B,
    p_power_ceil,
    run_cli,
    solve_alpha_p,
    verify_conjugation,
    verify_milnor_c2,
    verify_newton,
)

__all__ = [
    "ContradictionError",
    "DomainError",
    "PreconditionError",
    "StructuralError",
    "binom_mod",
    "build_A",
    "build_B",
    "build_D",
    "decide_global",
    "decide_p",
    "derive_recurrence",
    "lift_power_sum",
    "order_of_B",
    "p_power_ceil",
    "run_cli",
    "solve_alpha_p",
    "verify_conjugation",
    "verify_milnor_c2",
    "verify_newton",
]
