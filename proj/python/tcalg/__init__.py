"""Exact computations with Weyl, Hopf and conformal algebras, formal
distributions and operads."""

from ._core import (
    DimensionMismatch,
    IndexOutOfRange,
    InconsistentTable,
    NotReconstructible,
    ParseError,
    SessionError,
    TcalgError,
    TypeMismatch,
    dim,
    evaluate,
    evaluate_json,
    format_expr,
    run,
    run_suite,
    suite_names,
    type_of,
)

__all__ = [
    "DimensionMismatch",
    "IndexOutOfRange",
    "InconsistentTable",
    "NotReconstructible",
    "ParseError",
    "SessionError",
    "TcalgError",
    "TypeMismatch",
    "dim",
    "evaluate",
    "evaluate_json",
    "format_expr",
    "run",
    "run_suite",
    "suite_names",
    "type_of",
]
