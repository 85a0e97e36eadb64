"""Line-oriented interactive loop around the evaluator."""
from __future__ import annotations

import sys
from typing import TextIO

from ..errors import DslError, MtopError
from .evaluator import Env, evaluate, kind_of
from .parser import parse
from .printer import format_value

PROMPT = "mtop> "

HELP = """\
statements:  #elements x,y,z   #omega 4   name = expr   expr
operators:   | union   & intersection   \\ difference   ~ complement
functions:   phi psi inv compl check1 check2 check3
commands:    :env   :load <file>   :quit
"""


def format_output(name, value, unicode: bool = False) -> str:
    text = format_value(value, unicode)
    return f"{name} = {text}" if name is not None else text


class Repl:
    def __init__(self, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout,
                 unicode: bool = False, env: Env | None = None):
        self.stdin = stdin
        self.stdout = stdout
        self.unicode = unicode
        self.env = Env() if env is None else env
        self.interactive = stdin.isatty() if hasattr(stdin, "isatty") else False

    def write(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def run_source(self, source: str) -> None:
        for stmt in parse(source):
            value = evaluate(stmt, self.env)
            if value is not None:
                self.write(format_output(getattr(stmt, "name", None), value, self.unicode))

    def show_env(self) -> None:
        u = self.env.universe
        if u is None:
            self.write("universe: (none)")
        else:
            self.write(f"universe: elements={','.join(u.elements)} omega={u.omega}")
        for name, value in self.env.bindings.items():
            self.write(f"{name} : {kind_of(value).value} = {format_value(value, self.unicode)}")

    def handle(self, line: str) -> bool:
        """Process one input line. Returns False when the loop should stop."""
        line = line.strip()
        if not line:
            return True
        if line.startswith(":"):
            cmd, _, rest = line.partition(" ")
            if cmd in (":quit", ":q"):
                return False
            if cmd == ":env":
                self.show_env()
            elif cmd == ":help":
                self.stdout.write(HELP)
            elif cmd == ":load":
                path = rest.strip()
                try:
                    with open(path, encoding="utf-8") as fh:
                        source = fh.read()
                except OSError as exc:
                    self.write(f"error: cannot read {path!r}: {exc.strerror}")
                    return True
                self._guarded(source)
            else:
                self.write(f"error: unknown command {cmd!r}; try :help")
            return True
        self._guarded(line)
        return True

    def _guarded(self, source: str) -> None:
        try:
            self.run_source(source)
        except (DslError, MtopError) as exc:
            self.write(f"error: {exc}")

    def loop(self) -> None:
        while True:
            if self.interactive:
                try:
                    line = input(PROMPT)
                except EOFError:
                    self.write("")
                    return
            else:
                self.stdout.write(PROMPT)
                line = self.stdin.readline()
                if not line:
                    self.write("")
                    return
            if not self.handle(line):
                return
