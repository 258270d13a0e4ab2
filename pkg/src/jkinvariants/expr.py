"""Small exact expression language for parameters, formulas and family templates.

Supports integer literals, names, ``+ - * / **``, unary minus, ``abs``,
comparisons (chained), ``and``/``or``/``not`` and the imaginary unit ``i``.
Floats are rejected so every value stays exact.
"""

from __future__ import annotations

import ast
import operator
from fractions import Fraction
from typing import Mapping

from .exactcore.field import GaussRat

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_CMPOPS = {
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
}


class ExprError(ValueError):
    pass


def _abs(v):
    if isinstance(v, GaussRat):
        raise ExprError("abs of a Gaussian value")
    return abs(v)


def _eval(node, env):
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ExprError(f"only integer literals allowed, got {node.value!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id in env:
            return env[node.id]
        if node.id == "i":
            return GaussRat(0, 1)
        raise ExprError(f"unknown name {node.id!r}")
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        if isinstance(node.op, ast.Not):
            return not v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval(node.left, env)
        right = _eval(node.right, env)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(right, Fraction) and right.denominator == 1):
                raise ExprError("exponents must be integers")
            right = int(right)
        return _BINOPS[type(node.op)](left, right)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env)
            if not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        vals = (_eval(v, env) for v in node.values)
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "abs":
        (arg,) = node.args
        return _abs(_eval(arg, env))
    raise ExprError(f"unsupported syntax: {ast.dump(node)}")


def evaluate(text: str, env: Mapping[str, object] | None = None):
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc}") from None
    return _eval(tree, dict(env or {}))


def names_in(text: str) -> set[str]:
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    return {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)}
