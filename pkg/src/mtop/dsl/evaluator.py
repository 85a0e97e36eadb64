"""Evaluator for parsed scripts.

Operators dispatch on the kind of their operands: on msets ``| & \\ ~`` are
union, intersection, clamped difference and global complement; on pair sets
``| & \\`` are the ordinary set operations. Mixing kinds is a type error.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from ..embed import (CofinitePairSet, FiniteGrid, NatGrid, PairSet, PhiOf,
                     complement_in, finite_grid, phi, phi_inverse, psi_downset)
from ..errors import (DslError, DslEvalError, DslTypeError, MtopError,
                      NoUniverse, UnboundIdentifier)
from ..mset import (Mset, Universe, complement_global, difference, empty_mset,
                    full_mset, intersect, make_mset, union)
from ..search import (Ambient, Identity, IdentityReport, IdentitySpec,
                      LhsVariant, check_identity)
from ..topology import Verdict
from .ast import (Assign, Binary, Call, Directive, EmptyLiteral, Ident,
                  MsetLiteral, PairLiteral, Unary)
from .parser import parse

__all__ = ["Kind", "Env", "kind_of", "evaluate", "run_script", "eval_expr_text"]


class Kind(str, enum.Enum):
    MSET = "MSET"
    PAIRSET = "PAIRSET"
    COFINITE = "COFINITE"
    REPORT = "REPORT"
    VERDICT = "VERDICT"
    AMBIENT = "AMBIENT"
    VARIANT = "VARIANT"
    EMPTY = "EMPTY"


class _Empty:
    """Value of ``{}`` before context fixes its kind."""

    def __repr__(self):
        return "EMPTY"


EMPTY = _Empty()

# reserved names usable as arguments to compl/check3 (and as `nat \ p`)
BUILTINS = {
    "grid": Ambient.GRID,
    "nat": Ambient.NAT,
    "phiU": Ambient.PHI_PARENT,
    "phiFull": Ambient.PHI_FULL,
    "global": LhsVariant.GLOBAL,
    "relative": LhsVariant.RELATIVE,
}


def kind_of(value) -> Kind:
    if isinstance(value, Mset):
        return Kind.MSET
    if isinstance(value, PairSet):
        return Kind.PAIRSET
    if isinstance(value, CofinitePairSet):
        return Kind.COFINITE
    if isinstance(value, IdentityReport):
        return Kind.REPORT
    if isinstance(value, Verdict):
        return Kind.VERDICT
    if isinstance(value, Ambient):
        return Kind.AMBIENT
    if isinstance(value, LhsVariant):
        return Kind.VARIANT
    if value is EMPTY:
        return Kind.EMPTY
    raise TypeError(f"not a language value: {value!r}")


@dataclass
class Env:
    elements: tuple[str, ...] | None = None
    omega: int | None = None
    bindings: dict[str, Any] = field(default_factory=dict)

    @property
    def universe(self) -> Universe | None:
        if self.elements is None or self.omega is None:
            return None
        return Universe(self.elements, self.omega)

    def require_universe(self, span) -> Universe:
        u = self.universe
        if u is None:
            missing = "#elements" if self.elements is None else "#omega"
            raise NoUniverse(f"no universe yet; {missing} must come first", *span)
        return u


def _fail(cls, message, node):
    line, col = node.span
    raise cls(message, line, col)


def _coerce(value, kind: Kind, env: Env, node):
    if value is EMPTY:
        u = env.require_universe(node.span)
        if kind is Kind.MSET:
            return empty_mset(u)
        if kind is Kind.PAIRSET:
            return PairSet(u)
    actual = kind_of(value)
    if actual is not kind:
        _fail(DslTypeError, f"expected {kind.value}, got {actual.value}", node)
    return value


def _finalize(value, env: Env, node):
    return _coerce(value, Kind.MSET, env, node) if value is EMPTY else value


_PAIRISH = (Kind.PAIRSET, Kind.COFINITE)


def _binary(node: Binary, left, right, env: Env):
    lk, rk = kind_of(left), kind_of(right)
    if lk is Kind.EMPTY and rk is Kind.EMPTY:
        # every operator maps (empty, empty) to empty in both kinds
        return EMPTY
    if lk is Kind.EMPTY:
        left = _coerce(left, Kind.MSET if rk is Kind.MSET else Kind.PAIRSET, env, node.left)
    elif rk is Kind.EMPTY:
        right = _coerce(right, Kind.MSET if lk is Kind.MSET else Kind.PAIRSET, env, node.right)
    lk, rk = kind_of(left), kind_of(right)

    if lk is Kind.AMBIENT and node.op == "\\" and rk is Kind.PAIRSET:
        if left is Ambient.NAT:
            return CofinitePairSet(right)
        if left is Ambient.GRID:
            return finite_grid(right.universe) - right
    if lk is Kind.MSET and rk is Kind.MSET:
        return {"|": union, "&": intersect, "\\": difference}[node.op](left, right)
    if lk in _PAIRISH and rk in _PAIRISH:
        if node.op == "|":
            return left | right
        if node.op == "&":
            return left & right
        return left - right
    _fail(DslTypeError, f"operator {node.op!r} cannot combine {lk.value} and {rk.value}", node)


def _ambient_arg(value, env: Env, node):
    if isinstance(value, Mset):
        return PhiOf(value)
    if value is EMPTY:
        return PhiOf(empty_mset(env.require_universe(node.span)))
    if isinstance(value, Ambient):
        return value
    _fail(DslTypeError, f"expected an ambient (an mset, grid, nat, phiU or phiFull), got {kind_of(value).value}", node)


def _call(node: Call, args: list, env: Env):
    name, n = node.name, len(args)

    def arity(lo, hi=None):
        hi = lo if hi is None else hi
        if not lo <= n <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            _fail(DslTypeError, f"{name} takes {want} arguments, got {n}", node)

    def arg(i, kind):
        return _coerce(args[i], kind, env, node.args[i])

    if name in ("phi", "psi"):
        arity(1)
        return (phi if name == "phi" else psi_downset)(arg(0, Kind.MSET))
    if name == "inv":
        arity(1)
        return phi_inverse(arg(0, Kind.PAIRSET))
    if name == "compl":
        arity(2)
        p = arg(0, Kind.PAIRSET)
        amb = _ambient_arg(args[1], env, node.args[1])
        if amb is Ambient.PHI_PARENT:
            _fail(DslTypeError, "compl has no parent; pass the mset itself instead of phiU", node.args[1])
        if isinstance(amb, Ambient):
            amb = {Ambient.PHI_FULL: PhiOf(full_mset(p.universe)),
                   Ambient.GRID: FiniteGrid(p.universe),
                   Ambient.NAT: NatGrid(p.universe)}[amb]
        return complement_in(p, amb)
    if name in ("check1", "check2"):
        arity(2, 3)
        m1, m2 = arg(0, Kind.MSET), arg(1, Kind.MSET)
        parent = arg(2, Kind.MSET) if n == 3 else full_mset(m1.universe)
        spec = IdentitySpec(Identity.U1 if name == "check1" else Identity.I2)
        return check_identity(spec, m1, m2, parent)
    if name == "check3":
        arity(3, 4)
        m, parent = arg(0, Kind.MSET), arg(1, Kind.MSET)
        amb = _ambient_arg(args[2], env, node.args[2])
        variant = LhsVariant.GLOBAL
        if n == 4:
            variant = _coerce(args[3], Kind.VARIANT, env, node.args[3])
        return check_identity(IdentitySpec(Identity.C3, variant, amb), m, None, parent)
    raise AssertionError(name)


def _eval(node, env: Env):
    try:
        return _eval_inner(node, env)
    except DslError:
        raise
    except (MtopError, ValueError) as exc:
        line, col = node.span
        raise DslEvalError(f"{type(exc).__name__}: {exc}", line, col) from exc


def _eval_inner(node, env: Env):
    if isinstance(node, MsetLiteral):
        u = env.require_universe(node.span)
        counts: dict[str, int] = {}
        for c, e in node.items:
            if e in counts:
                _fail(DslEvalError, f"element {e!r} listed twice in mset literal", node)
            counts[e] = c
        return make_mset(u, counts)
    if isinstance(node, PairLiteral):
        return PairSet(env.require_universe(node.span), node.pairs)
    if isinstance(node, EmptyLiteral):
        env.require_universe(node.span)
        return EMPTY
    if isinstance(node, Ident):
        if node.name in env.bindings:
            return env.bindings[node.name]
        if node.name in BUILTINS:
            return BUILTINS[node.name]
        _fail(UnboundIdentifier, f"unbound identifier {node.name!r}", node)
    if isinstance(node, Unary):
        child = _eval(node.child, env)
        if child is EMPTY:
            child = _coerce(child, Kind.MSET, env, node.child)
        if not isinstance(child, Mset):
            _fail(DslTypeError, f"'~' needs MSET, got {kind_of(child).value}", node)
        return complement_global(child)
    if isinstance(node, Binary):
        return _binary(node, _eval(node.left, env), _eval(node.right, env), env)
    if isinstance(node, Call):
        return _call(node, [_eval(a, env) for a in node.args], env)
    raise TypeError(f"not an expression: {node!r}")


def evaluate(stmt, env: Env):
    """Run one statement, mutating ``env``. Returns the statement's value.

    Directives return ``None``; assignments return the bound value.
    """
    if isinstance(stmt, Directive):
        if stmt.kind == "omega":
            if stmt.payload < 1:
                _fail(DslEvalError, "omega must be at least 1", stmt)
            env.omega = stmt.payload
        else:
            if len(set(stmt.payload)) != len(stmt.payload):
                _fail(DslEvalError, "duplicate element in #elements", stmt)
            env.elements = tuple(stmt.payload)
        env.bindings.clear()
        return None
    if isinstance(stmt, Assign):
        if stmt.name in BUILTINS:
            _fail(DslTypeError, f"{stmt.name!r} is a reserved name", stmt)
        value = _finalize(_eval(stmt.expr, env), env, stmt)
        env.bindings[stmt.name] = value
        return value
    return _finalize(_eval(stmt, env), env, stmt)


def run_script(source: str, env: Env | None = None) -> tuple[list[tuple[str | None, Any]], Env]:
    """Parse and run ``source``; return ``(name, value)`` per value-producing statement."""
    env = Env() if env is None else env
    outputs = []
    for stmt in parse(source):
        value = evaluate(stmt, env)
        if value is not None:
            outputs.append((stmt.name if isinstance(stmt, Assign) else None, value))
    return outputs, env


def eval_expr_text(source: str, env: Env):
    """Evaluate ``source`` (one or more statements) and return the last value."""
    outputs, _ = run_script(source, env)
    return outputs[-1][1] if outputs else None
