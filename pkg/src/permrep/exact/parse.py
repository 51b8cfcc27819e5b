"""Text grammar for field elements: integers, variables, + - * / ^ and parentheses."""

from __future__ import annotations

import ast

from .rational import MultiRational, RationalFunctionField


class ExpressionError(ValueError):
    pass


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def parse_expr(text: str, field: RationalFunctionField) -> MultiRational:
    """Parse ``text`` as an element of ``field``.

    Only variables declared by the field are accepted; ``^`` is exponentiation.
    Floats and any other Python syntax are rejected.
    """
    if not isinstance(text, str) or not text.strip():
        raise ExpressionError("empty expression")
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as err:
        raise ExpressionError(f"malformed expression {text!r}: {err.msg}") from None
    try:
        return field.convert(_eval(tree.body, field))
    except ZeroDivisionError as err:
        raise ExpressionError(f"division by zero in {text!r}") from err


def _eval(node, field):
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval(node.left, field)
            exp = _eval(node.right, field)
            if isinstance(exp, MultiRational):
                if not exp.is_constant:
                    raise ExpressionError("exponent must be an integer constant")
                exp = exp.constant_value()
            if getattr(exp, "denominator", 1) != 1:
                raise ExpressionError("exponent must be an integer")
            exp = int(exp)
            if not isinstance(base, MultiRational):
                base = field.convert(base)
            return base**exp
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ExpressionError(f"operator {type(node.op).__name__} not allowed")
        left = _eval(node.left, field)
        right = _eval(node.right, field)
        if isinstance(left, int) and isinstance(right, int) and isinstance(node.op, ast.Div):
            left = field.convert(left)
        return op(left, right)
    if isinstance(node, ast.UnaryOp):
        val = _eval(node.operand, field)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        raise ExpressionError("only unary + and - are allowed")
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExpressionError(f"only integer literals are allowed, got {node.value!r}")
        return node.value
    if isinstance(node, ast.Name):
        try:
            return field.var(node.id)
        except KeyError as err:
            raise ExpressionError(str(err.args[0])) from None
    raise ExpressionError(f"unsupported syntax: {type(node).__name__}")
