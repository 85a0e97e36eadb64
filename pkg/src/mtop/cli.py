"""Command-line entry point ``mtop``.

Exit codes: 0 success, 2 search budget exceeded, 10 counterexample found by
``search``, 64 usage error, 65 unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .dsl import Repl, format_value, run_script, value_to_json
from .dsl.evaluator import kind_of
from .dsl.repl import format_output
from .errors import BudgetExceeded, DslError, MtopError
from .mset import Mset, enumerate_submsets, full_mset
from .search import (Ambient, Identity, IdentitySpec, LhsVariant, SearchBounds,
                     check_identity, reproduce_example1, search_min_counterexample,
                     search_topology_counterexample)
from .dsl.printer import format_report
from .topology import MFamily, image_family, is_m_topology, is_point_topology

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_WITNESS = 10
EXIT_USAGE = 64
EXIT_DATAERR = 65

_IDENTITIES = {"1": Identity.U1, "2": Identity.I2, "3": Identity.C3}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=("text", "json"),
                   default=default if suppress else "text", help="output format")
    p.add_argument("--unicode", action="store_true",
                   default=default if suppress else False, help="use ⊔ ⊓ ∖ ∅ in text output")


def _identity_args(p: argparse.ArgumentParser, choices) -> None:
    p.add_argument("--identity", choices=choices, help="1 = union form, 2 = intersection form, 3 = complement form")
    p.add_argument("--lhs", choices=[v.value for v in LhsVariant], default="global",
                   help="complement on the left side of identity 3")
    p.add_argument("--ambient", choices=[a.value for a in Ambient], default="phiFull",
                   help="ambient for the complement on the right side of identity 3")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mtop", description="Bounded-multiset algebra and counterexample search.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("example1", help="reproduce Example 1 with match marks")
    _add_common(p, True)

    p = sub.add_parser("eval", help="run a script")
    p.add_argument("file")
    _add_common(p, True)

    p = sub.add_parser("repl", help="interactive session")
    _add_common(p, True)

    p = sub.add_parser("check", help="check one identity on given msets")
    _identity_args(p, list(_IDENTITIES))
    p.add_argument("--data", required=True, help="JSON file (or inline JSON) with parent, m1 and m2")
    _add_common(p, True)

    p = sub.add_parser("search", help="search for a minimal counterexample")
    _identity_args(p, [*_IDENTITIES, "topology"])
    p.add_argument("--max-elems", type=int, required=True)
    p.add_argument("--max-omega", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--trials", type=int, help="randomized mode with this many samples")
    p.add_argument("--seed", type=int, help="seed for randomized mode (default $MTOP_SEED or 0)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-subbasis", type=int, default=2)
    _add_common(p, True)

    p = sub.add_parser("check-topology", help="check a family and its image")
    p.add_argument("file")
    _add_common(p, True)

    p = sub.add_parser("enumerate", help="list all submsets of a parent")
    p.add_argument("file")
    _add_common(p, True)
    return parser


def _load_json(source: str):
    text = source
    if not source.lstrip().startswith(("{", "[")):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _spec_from_args(args, data=None) -> IdentitySpec:
    if args.identity is None:
        if data is not None and "spec" in data:
            return IdentitySpec.from_json(data["spec"])
        raise UsageError("--identity is required")
    which = _IDENTITIES[args.identity]
    if which is Identity.C3:
        return IdentitySpec(which, LhsVariant(args.lhs), Ambient(args.ambient))
    return IdentitySpec(which)


# -- commands -----------------------------------------------------------------

def cmd_example1(args, out: TextIO) -> int:
    report = reproduce_example1()
    if args.format == "json":
        _dump(report.to_json(), out)
        return EXIT_OK
    u = args.unicode
    out.write("-- Example 1: X={x,y,z}, omega=4\n")
    for name, m in report.inputs.items():
        out.write(format_output(name, m, u) + "\n")
    for e in report.values:
        mark = "ok" if e.matched else f"MISMATCH expected {format_value(e.expected, u)}"
        label = f" {e.label}" if u else ""
        out.write(f"{format_output(e.name, e.value, u)}  -- {mark}{label}\n")
    for name, rep in report.identities:
        out.write(format_output(name, rep, u) + "\n")
    matched = sum(e.matched for e in report.values)
    held = [name for name, rep in report.identities if rep.holds]
    out.write(f"-- {matched}/{len(report.values)} values match the fixtures; "
              f"identities holding: {', '.join(held) if held else 'none'}\n")
    return EXIT_OK


def cmd_eval(args, out: TextIO) -> int:
    with open(args.file, encoding="utf-8") as fh:
        source = fh.read()
    outputs, _ = run_script(source)
    if args.format == "json":
        _dump({"outputs": [{"name": n, "kind": kind_of(v).value, "value": value_to_json(v)}
                           for n, v in outputs]}, out)
    else:
        for name, value in outputs:
            out.write(format_output(name, value, args.unicode) + "\n")
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    data = _load_json(args.data)
    spec = _spec_from_args(args, data)
    if "parent" in data and data["parent"] is not None:
        parent = Mset.from_json(data["parent"])
        universe = parent.universe
        m1 = Mset.from_json(data["m1"], universe)
    else:
        m1 = Mset.from_json(data["m1"])
        parent = full_mset(m1.universe)
    m2 = None
    if spec.binary and data.get("m2"):
        m2 = Mset.from_json(data["m2"], parent.universe)
    rep = check_identity(spec, m1, m2, parent)
    if args.format == "json":
        _dump(rep.to_json(), out)
    else:
        out.write(format_report(rep, args.unicode) + "\n")
    return EXIT_OK


def _format_witness(w, u: bool) -> str:
    lines = [f"counterexample at order key {tuple(w.order_key)}",
             f"universe: elements={','.join(w.universe.elements)} omega={w.universe.omega}",
             f"parent = {format_value(w.parent, u)}"]
    if w.kind == "identity":
        lines.append(f"m1 = {format_value(w.msets['m1'], u)}")
        if w.msets.get("m2") is not None:
            lines.append(f"m2 = {format_value(w.msets['m2'], u)}")
        lines.append(format_report(w.report, u))
    else:
        fam = w.msets["family"]
        lines.append("subbasis = [" + ", ".join(format_value(m, u) for m in w.msets["subbasis"]) + "]")
        lines.append("family = [" + ", ".join(format_value(m, u) for m in fam.sorted_members()) + "]")
        img = image_family(fam)
        lines.append(f"image carrier = {format_value(img.carrier, u)}")
        lines.append("image = [" + ", ".join(format_value(p, u) for p in img.sorted_members()) + "]")
        lines.append(f"M-topology: {w.verdicts['m_topology']}")
        lines.append(f"image point topology: {w.verdicts['image']}")
    return "\n".join(lines) + "\n"


def cmd_search(args, out: TextIO) -> int:
    if args.identity is None:
        raise UsageError("--identity is required")
    if args.max_elems < 1 or args.max_omega < 1 or args.jobs < 1:
        raise UsageError("--max-elems, --max-omega and --jobs must be positive")
    randomized = args.trials is not None
    if args.seed is not None and not randomized:
        raise UsageError("--seed needs --trials")
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("MTOP_SEED", "0"))
    extra = {} if args.budget is None else {"budget": args.budget}
    bounds = SearchBounds(args.max_elems, args.max_omega, exhaustive=not randomized,
                          seed=seed, trials=args.trials or 0,
                          max_subbasis=args.max_subbasis, **extra)
    if args.identity == "topology":
        if randomized:
            raise UsageError("topology search is exhaustive only")
        witness = search_topology_counterexample(bounds, jobs=args.jobs)
    else:
        witness = search_min_counterexample(_spec_from_args(args), bounds, jobs=args.jobs)
    if args.format == "json":
        _dump({"bounds": bounds.to_json(),
               "witness": None if witness is None else witness.to_json()}, out)
    elif witness is None:
        out.write("no counterexample within bounds\n")
    else:
        out.write(_format_witness(witness, args.unicode))
    return EXIT_OK if witness is None else EXIT_WITNESS


def cmd_check_topology(args, out: TextIO) -> int:
    data = _load_json(args.file)
    if "family" in data:
        data = data["family"]
    fam = MFamily.from_json(data)
    img = image_family(fam)
    mv, pv = is_m_topology(fam), is_point_topology(img)
    if args.format == "json":
        _dump({"m_topology": mv.to_json(), "image": pv.to_json(),
               "image_family": img.to_json()}, out)
    else:
        out.write(f"M-topology: {mv}\nimage point topology: {pv}\n")
    return EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    parent = Mset.from_json(_load_json(args.file))
    for m in enumerate_submsets(parent):
        if args.format == "json":
            out.write(json.dumps(m.to_json()) + "\n")
        else:
            out.write(format_value(m, args.unicode) + "\n")
    return EXIT_OK


def cmd_repl(args, out: TextIO) -> int:
    Repl(sys.stdin, out, unicode=args.unicode).loop()
    return EXIT_OK


COMMANDS = {
    "example1": cmd_example1,
    "eval": cmd_eval,
    "repl": cmd_repl,
    "check": cmd_check,
    "search": cmd_search,
    "check-topology": cmd_check_topology,
    "enumerate": cmd_enumerate,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_help().rstrip() + "\nmtop: error: a command is required")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"mtop: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (OSError, ValueError, KeyError, TypeError, MtopError) as exc:
        # json.JSONDecodeError is a ValueError; DslError is an MtopError
        what = type(exc).__name__
        if isinstance(exc, OSError):
            msg = f"{exc.filename}: {exc.strerror}"
        elif isinstance(exc, DslError):
            msg = str(exc)
        else:
            msg = f"{what}: {exc}"
        err.write(f"mtop: {msg}\n")
        return EXIT_DATAERR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
