"""Syntax tree for the mset expression language.

Every node records the ``(line, column)`` where it starts. Spans are excluded
from equality so a reparsed tree compares equal to the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

Span = tuple[int, int]


@dataclass(frozen=True)
class MsetLiteral:
    items: tuple[tuple[int, str], ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class PairLiteral:
    pairs: tuple[tuple[str, int], ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class EmptyLiteral:
    """``{}``; its kind is taken from context."""

    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Ident:
    name: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    child: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Assign:
    name: str
    expr: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Directive:
    kind: str  # "elements" or "omega"
    payload: tuple[str, ...] | int
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[MsetLiteral, PairLiteral, EmptyLiteral, Ident, Unary, Binary, Call]
Stmt = Union[Directive, Assign, Expr]

FUNCTIONS = ("phi", "psi", "inv", "compl", "check1", "check2", "check3")

# binary operators, loosest first
PRECEDENCE = {"|": 1, "\\": 2, "&": 3}
