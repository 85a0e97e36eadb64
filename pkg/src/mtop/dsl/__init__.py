"""A small expression language for mset and pair-set algebra."""
from .ast import (Assign, Binary, Call, Directive, EmptyLiteral, Ident,
                  MsetLiteral, PairLiteral, Unary)
from .evaluator import EMPTY, Env, Kind, evaluate, kind_of, run_script
from .parser import parse, parse_expr, tokenize
from .printer import format_ast, format_report, format_script, format_value
from .repl import Repl


def value_to_json(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if hasattr(value, "value"):
        return value.value
    raise TypeError(f"cannot serialize {value!r}")


__all__ = [
    "Assign", "Binary", "Call", "Directive", "EmptyLiteral", "Ident",
    "MsetLiteral", "PairLiteral", "Unary",
    "EMPTY", "Env", "Kind", "evaluate", "kind_of", "run_script",
    "parse", "parse_expr", "tokenize",
    "format_ast", "format_report", "format_script", "format_value",
    "Repl", "value_to_json",
]
