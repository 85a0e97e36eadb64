"""Canonical text for values and syntax trees."""
from __future__ import annotations

import enum

from ..embed import CofinitePairSet, PairSet
from ..mset import Mset
from ..search import IdentityReport
from ..topology import Verdict
from .ast import (PRECEDENCE, Assign, Binary, Call, Directive, EmptyLiteral,
                  Ident, MsetLiteral, PairLiteral, Unary)

__all__ = ["format_value", "format_ast", "format_script", "format_report"]

_UNICODE_OPS = {"|": "⊔", "&": "⊓", "\\": "∖"}


def _empty(unicode: bool) -> str:
    return "∅" if unicode else "{}"


def format_value(value, unicode: bool = False) -> str:
    if isinstance(value, Mset):
        return str(value) if not value.is_empty() else _empty(unicode)
    if isinstance(value, PairSet):
        return str(value) if len(value) else _empty(unicode)
    if isinstance(value, CofinitePairSet):
        op = "∖" if unicode else "\\"
        return f"nat {op} {format_value(value.excluded, unicode)}"
    if isinstance(value, IdentityReport):
        return format_report(value, unicode)
    if isinstance(value, Verdict):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    return str(value)


def format_report(rep: IdentityReport, unicode: bool = False) -> str:
    status = "holds" if rep.holds else "fails"
    text = (f"{rep.spec.label()}: {status} lhs={format_value(rep.lhs, unicode)} "
            f"rhs={format_value(rep.rhs, unicode)}")
    if rep.first_difference is not None:
        e, k = rep.first_difference
        text += f" first_difference=({e},{k})"
    return text


def _op(op: str, unicode: bool) -> str:
    return _UNICODE_OPS[op] if unicode else op


def format_ast(node, unicode: bool = False) -> str:
    if isinstance(node, MsetLiteral):
        return "{" + ",".join(f"{c}/{e}" for c, e in node.items) + "}"
    if isinstance(node, PairLiteral):
        return "{" + ",".join(f"({e},{k})" for e, k in node.pairs) + "}"
    if isinstance(node, EmptyLiteral):
        return _empty(unicode)
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Unary):
        child = format_ast(node.child, unicode)
        if isinstance(node.child, Binary):
            child = f"({child})"
        return f"~{child}"
    if isinstance(node, Binary):
        prec = PRECEDENCE[node.op]
        left = format_ast(node.left, unicode)
        right = format_ast(node.right, unicode)
        if isinstance(node.left, Binary) and PRECEDENCE[node.left.op] < prec:
            left = f"({left})"
        # left-associative: an equal-precedence right child needs parentheses
        if isinstance(node.right, Binary) and PRECEDENCE[node.right.op] <= prec:
            right = f"({right})"
        return f"{left} {_op(node.op, unicode)} {right}"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(format_ast(a, unicode) for a in node.args)})"
    if isinstance(node, Assign):
        return f"{node.name} = {format_ast(node.expr, unicode)}"
    if isinstance(node, Directive):
        if node.kind == "omega":
            return f"#omega {node.payload}"
        return "#elements " + ",".join(node.payload)
    raise TypeError(f"not a syntax node: {node!r}")


def format_script(stmts, unicode: bool = False) -> str:
    return "".join(format_ast(s, unicode) + "\n" for s in stmts)
