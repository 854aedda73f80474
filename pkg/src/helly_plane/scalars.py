"""Scalar field helpers: exact rationals with a float fallback.

Exact work runs on `fractions.Fraction` (closed arithmetic, exact
comparison); Euclidean work runs on `float`. The comparison helpers below
dispatch on operand types: as soon as a float is involved the comparison
becomes tolerant (default tolerance 1e-9), otherwise it is exact. This is
what lets every predicate in the library distinguish `>=` from `>` without
carrying an explicit mode flag around.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]

DEFAULT_TOL = 1e-9


def parse_scalar(text: str, mode: str = "exact") -> Scalar:
    """Parse a decimal or "p/q" string. Exact mode returns a Fraction."""
    value = Fraction(str(text))
    if mode == "float":
        return float(value)
    return value


def format_scalar(x: Scalar) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def is_float(*xs: Scalar) -> bool:
    return any(isinstance(x, float) for x in xs)


def eq(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_float(a, b):
        return abs(a - b) <= tol
    return a == b


def le(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_float(a, b):
        return a <= b + tol
    return a <= b


def ge(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_float(a, b):
        return a >= b - tol
    return a >= b


def lt(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    """Strict less-than; for floats the gap must exceed the tolerance."""
    if is_float(a, b):
        return a < b - tol
    return a < b


def gt(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_float(a, b):
        return a > b + tol
    return a > b


def sgn(x: Scalar, tol: float = 0.0) -> int:
    """Sign of x; floats within tol of zero count as zero."""
    if isinstance(x, float):
        if abs(x) <= tol:
            return 0
        return 1 if x > 0 else -1
    if x == 0:
        return 0
    return 1 if x > 0 else -1


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Division that stays rational on rational inputs (int/int included)."""
    if is_float(a, b):
        return a / b
    return Fraction(a) / Fraction(b)
