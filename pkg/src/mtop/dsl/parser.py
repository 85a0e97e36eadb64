"""Lexer and recursive-descent parser.

Grammar, tightest operator last::

    script    := stmt*                      (';' may separate statements)
    stmt      := directive | IDENT '=' expr | expr
    directive := '#elements' IDENT (',' IDENT)* | '#omega' INT
    expr      := diff ('|' diff)*
    diff      := and ('\\' and)*
    and       := unary ('&' unary)*
    unary     := '~' unary | atom
    atom      := mset_lit | pair_lit | '{' '}' | IDENT | call | '(' expr ')'
    mset_lit  := '{' INT '/' IDENT (',' INT '/' IDENT)* '}'
    pair_lit  := '{' '(' IDENT ',' INT ')' (',' '(' IDENT ',' INT ')')* '}'
    call      := NAME '(' [expr (',' expr)*] ')'

``--`` starts a comment. The Unicode spellings ``⊔ ⊓ ∖ ∅`` are accepted as
aliases for ``| & \\ {}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import DslSyntaxError
from .ast import (FUNCTIONS, Assign, Binary, Call, Directive, EmptyLiteral,
                  Ident, MsetLiteral, PairLiteral, Unary)

__all__ = ["Token", "tokenize", "parse", "parse_expr"]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


_TOKEN_RE = re.compile(r"""
    (?P<WS>[ \t\r]+)
  | (?P<NL>\n)
  | (?P<COMMENT>--[^\n]*)
  | (?P<DIRECTIVE>\#[A-Za-z]+)
  | (?P<INT>[0-9]+)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<EMPTY>∅)
  | (?P<OP>[{}()/,|&\\~=;]|⊔|⊓|∖)
""", re.VERBOSE)

_ALIASES = {"⊔": "|", "⊓": "&", "∖": "\\"}
DIRECTIVES = ("#elements", "#omega")


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        column = pos - line_start + 1
        if m is None:
            raise DslSyntaxError(f"unexpected character {source[pos]!r}", line, column)
        kind, text = m.lastgroup, m.group()
        pos = m.end()
        if kind == "NL":
            line, line_start = line + 1, pos
            continue
        if kind in ("WS", "COMMENT"):
            continue
        if kind == "DIRECTIVE" and text not in DIRECTIVES:
            raise DslSyntaxError(f"unknown directive {text!r}", line, column, DIRECTIVES)
        if kind == "OP":
            text = _ALIASES.get(text, text)
            kind = text
        tokens.append(Token(kind, text, line, column))
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def error(self, expected, what=None):
        tok = self.tok
        raise DslSyntaxError(what or f"unexpected {tok.describe()}", tok.line, tok.column, expected)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.error({kind})
        return self.advance()

    def script(self) -> list:
        stmts = []
        while True:
            while self.tok.kind == ";":
                self.advance()
            if self.tok.kind == "EOF":
                return stmts
            stmts.append(self.statement())

    def statement(self):
        tok = self.tok
        if tok.kind == "DIRECTIVE":
            return self.directive()
        if tok.kind == "IDENT" and self.peek().kind == "=":
            self.advance()
            self.advance()
            return Assign(tok.text, self.expr(), (tok.line, tok.column))
        return self.expr()

    def directive(self):
        tok = self.advance()
        span = (tok.line, tok.column)
        if tok.text == "#omega":
            return Directive("omega", int(self.expect("INT").text), span)
        names = [self.expect("IDENT").text]
        while self.tok.kind == ",":
            self.advance()
            names.append(self.expect("IDENT").text)
        return Directive("elements", tuple(names), span)

    def _binary_level(self, op, operand):
        left = operand()
        while self.tok.kind == op:
            tok = self.advance()
            left = Binary(op, left, operand(), (tok.line, tok.column))
        return left

    def expr(self):
        return self._binary_level("|", self.diff)

    def diff(self):
        return self._binary_level("\\", self.conj)

    def conj(self):
        return self._binary_level("&", self.unary)

    def unary(self):
        if self.tok.kind == "~":
            tok = self.advance()
            return Unary("~", self.unary(), (tok.line, tok.column))
        return self.atom()

    def atom(self):
        tok = self.tok
        span = (tok.line, tok.column)
        if tok.kind == "{":
            return self.braced()
        if tok.kind == "EMPTY":
            self.advance()
            return EmptyLiteral(span)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "IDENT":
            self.advance()
            if self.tok.kind != "(":
                return Ident(tok.text, span)
            if tok.text not in FUNCTIONS:
                raise DslSyntaxError(f"unknown function {tok.text!r}", tok.line, tok.column, FUNCTIONS)
            self.advance()
            args = []
            if self.tok.kind != ")":
                args.append(self.expr())
                while self.tok.kind == ",":
                    self.advance()
                    args.append(self.expr())
            self.expect(")")
            return Call(tok.text, tuple(args), span)
        self.error({"{", "(", "~", "IDENT"})

    def braced(self):
        start = self.advance()
        span = (start.line, start.column)
        if self.tok.kind == "}":
            self.advance()
            return EmptyLiteral(span)
        if self.tok.kind == "(":
            pairs = [self.pair()]
            while self.tok.kind == ",":
                self.advance()
                pairs.append(self.pair())
            self._close_brace()
            return PairLiteral(tuple(pairs), span)
        if self.tok.kind == "INT":
            items = [self.count_item()]
            while self.tok.kind == ",":
                self.advance()
                items.append(self.count_item())
            self._close_brace()
            return MsetLiteral(tuple(items), span)
        self.error({"INT", "(", "}"})

    def _close_brace(self):
        if self.tok.kind != "}":
            self.error({",", "}"})
        self.advance()

    def count_item(self):
        count = int(self.expect("INT").text)
        self.expect("/")
        return count, self.expect("IDENT").text

    def pair(self):
        self.expect("(")
        name = self.expect("IDENT").text
        self.expect(",")
        k = int(self.expect("INT").text)
        self.expect(")")
        return name, k


def parse(source: str) -> list:
    """Parse a script into a list of statements."""
    return _Parser(source).script()


def parse_expr(source: str):
    """Parse a single expression; trailing input is an error."""
    p = _Parser(source)
    node = p.expr()
    if p.tok.kind != "EOF":
        p.error({"EOF", "|", "&", "\\"})
    return node
