"""Exact q-deformed modular group computations."""

from ._core import (
    MathError,
    ParseError,
    PreconditionError,
    RatFunc,
    bracket,
    classical_witt_flow,
    even_cf,
    flow_d0,
    flow_d0_matrix,
    flow_d1,
    flow_dm1,
    generator,
    positivity_check,
    q_flat,
    q_sharp,
    suite_names,
    transition_check,
    tsallis_at,
    tsallis_series,
    verify,
    witt_bracket,
)

__all__ = [
    "MathError",
    "ParseError",
    "PreconditionError",
    "RatFunc",
    "bracket",
    "classical_witt_flow",
    "even_cf",
    "flow_d0",
    "flow_d0_matrix",
    "flow_d1",
    "flow_dm1",
    "generator",
    "positivity_check",
    "q_flat",
    "q_sharp",
    "suite_names",
    "transition_check",
    "tsallis_at",
    "tsallis_series",
    "verify",
    "witt_bracket",
]
