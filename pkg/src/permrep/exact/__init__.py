"""Exact scalars: rationals, prime fields and multivariate rational function fields."""

from .fields import QQ, BaseField, PrimeField, SmallGF
from .parse import ExpressionError, parse_expr
from .rational import MultiRational, PoleError, RationalFunctionField


def rf_arith(a: MultiRational, b: MultiRational, op: str) -> MultiRational:
    if a.field != b.field:
        raise ValueError("operands live in different fields")
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def permute_vars(f: MultiRational, perm) -> MultiRational:
    return f.permute(perm)


def substitute(f: MultiRational, assignment) -> MultiRational:
    return f.substitute(assignment)


__all__ = [
    "QQ",
    "BaseField",
    "PrimeField",
    "SmallGF",
    "MultiRational",
    "RationalFunctionField",
    "PoleError",
    "ExpressionError",
    "parse_expr",
    "rf_arith",
    "permute_vars",
    "substitute",
]
