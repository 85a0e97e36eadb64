"""Acceptance gate: one check per exit criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""
import io
import itertools
import json
import random
import time
from importlib.resources import files

from mtop import (Ambient, Identity, IdentitySpec, LhsVariant, Mset,
                  SearchBounds, Universe, complement_global,
                  complement_relative, empty_mset, enumerate_m_topologies,
                  enumerate_submsets, full_mset, image_family, intersect,
                  is_point_topology, is_submset, phi, phi_inverse, psi_downset,
                  replay_witness, search_min_counterexample,
                  search_topology_counterexample, union)
from mtop.cli import run
from mtop.dsl import Env, format_ast, format_value, parse_expr, run_script
from mtop.search import EXAMPLE1_FIXTURES

import oracle_bruteforce as oracle
from exprgen import random_expr

RESULTS = {}

U1 = IdentitySpec(Identity.U1)
I2 = IdentitySpec(Identity.I2)
C3_FULL = IdentitySpec(Identity.C3, LhsVariant.GLOBAL, Ambient.PHI_FULL)


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[number] = line
    print(line)
    assert ok, line


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue()


def mset_json(counts):
    return {"elements": ["x", "y", "z"], "omega": 4, "counts": counts}


# Example 1 values typed in from the worked example, independent of the package fixtures.
EXAMPLE1_VALUES = {
    "M1_join_M2": mset_json({"x": 4, "y": 3}),
    "M1_meet_M2": mset_json({"x": 2, "y": 3}),
    "M2_delta": mset_json({"x": 2, "y": 1, "z": 4}),
    "M2_delta_U": mset_json({"x": 2, "z": 2}),
    "phi_M1": [["x", 4], ["y", 3]],
    "phi_M2": [["x", 2], ["y", 3]],
    "phi_M1_cup_phi_M2": [["x", 2], ["x", 4], ["y", 3]],
    "phi_M1_cap_phi_M2": [["y", 3]],
    "phi_M1_join_M2": [["x", 4], ["y", 3]],
    "phi_M1_meet_M2": [["x", 2], ["y", 3]],
    "phi_M2_delta": [["x", 2], ["y", 1], ["z", 4]],
    "phi_M2_delta_U": [["x", 2], ["z", 2]],
    "phi_U": [["x", 4], ["y", 3], ["z", 2]],
    "phi_V": [["x", 4], ["y", 4], ["z", 4]],
    "phiU_minus_phi_M2": [["x", 4], ["z", 2]],
    "phiV_minus_phi_M2": [["x", 4], ["y", 4], ["z", 4]],
    "nat_minus_phi_M2": {"cofinite_excluding": [["x", 2], ["y", 3]]},
    "grid_minus_phi_M2": [["x", 1], ["x", 3], ["x", 4], ["y", 1], ["y", 2], ["y", 4],
                          ["z", 1], ["z", 2], ["z", 3], ["z", 4]],
}


def test_criterion_1_example1_bit_exact():
    start = time.perf_counter()
    code, out = cli("example1", "--format", "json")
    elapsed = time.perf_counter() - start
    data = json.loads(out)
    values = {v["name"]: v for v in data["values"]}
    mismatched = [n for n, want in EXAMPLE1_VALUES.items() if values[n]["value"] != want]
    all_marked = all(v["matched"] for v in data["values"])
    ids = {r["name"]: r for r in data["identities"]}
    ids_false = all(not r["holds"] for r in ids.values())
    u1 = ids["identity1"]
    ok = (code == 0 and not mismatched and all_marked and ids_false
          and set(values) == set(EXAMPLE1_VALUES)
          and u1["lhs"] == [["x", 4], ["y", 3]] and u1["rhs"] == [["x", 2], ["x", 4], ["y", 3]]
          and ids["identity2"]["lhs"] == [["x", 2], ["y", 3]] and ids["identity2"]["rhs"] == [["y", 3]]
          and len(values["grid_minus_phi_M2"]["value"]) == 10
          and elapsed < 1.0)
    report(1, "Example 1 reproduction", ok,
           f"{len(EXAMPLE1_VALUES) - len(mismatched)}/{len(EXAMPLE1_VALUES)} values, "
           f"{len(ids)} identity checks all false={ids_false}, {elapsed:.3f}s")


def test_criterion_2_minimal_counterexamples():
    start = time.perf_counter()
    found = {name: search_min_counterexample(spec, SearchBounds(3, 4))
             for name, spec in (("U1", U1), ("I2", I2), ("C3", C3_FULL))}
    elapsed = time.perf_counter() - start
    u = Universe(("x",), 2)
    m = lambda c: Mset(u, (c,))
    ok = elapsed < 30
    for name in ("U1", "I2"):
        w = found[name]
        ok &= (w.universe == u and w.parent == m(2) and w.msets["m1"] == m(1) and w.msets["m2"] == m(2))
    w = found["C3"]
    ok &= w.universe == u and w.msets["m1"] == m(1)
    # independent oracle agrees on the order key and operands
    for name, w in found.items():
        key, pvec, v1, v2 = oracle.first_failure(name, 3, 4)
        ok &= (w.order_key == key and w.parent.vector == pvec and w.msets["m1"].vector == v1
               and (v2 is None or w.msets["m2"].vector == v2))
    # and nothing fails at omega = 1
    ok &= all(oracle.first_failure(name, 3, 1) is None for name in found)
    report(2, "minimal counterexamples |X|<=3, omega<=4", ok, f"{elapsed:.2f}s")


def test_criterion_3_degenerate_regime():
    start = time.perf_counter()
    none_found = all(search_min_counterexample(spec, SearchBounds(3, 1)) is None
                     for spec in (U1, I2, C3_FULL))
    families = 0
    images_ok = True
    for n in (1, 2, 3):
        u = Universe(tuple("xyz"[:n]), 1)
        for parent in enumerate_submsets(full_mset(u)):
            for fam in enumerate_m_topologies(parent):
                families += 1
                images_ok &= is_point_topology(image_family(fam)).holds
    topo_none = search_topology_counterexample(SearchBounds(3, 1)) is None
    elapsed = time.perf_counter() - start
    ok = none_found and images_ok and topo_none and elapsed < 10
    report(3, "omega=1 soundness", ok, f"{families} M-topologies checked, {elapsed:.2f}s")


def test_criterion_4_topology_refutation():
    start = time.perf_counter()
    w = search_topology_counterexample(SearchBounds(1, 2))
    u = Universe(("x",), 2)
    chain = {Mset(u, (0,)), Mset(u, (1,)), Mset(u, (2,))}
    replayed = replay_witness(json.loads(json.dumps(w.to_json())))
    elapsed = time.perf_counter() - start
    ok = (w is not None and w.parent == Mset(u, (2,)) and w.msets["family"].members == chain
          and w.verdicts["m_topology"].holds and not w.verdicts["image"].holds
          and replayed["m_topology"].holds and not replayed["image"].holds
          and replayed["image"].violation == w.verdicts["image"].violation
          and elapsed < 5)
    report(4, "topology refutation at |X|<=1, omega<=2", ok,
           f"image violation {w.verdicts['image'].violation.axiom}, {elapsed:.3f}s")


def test_criterion_5_contrast_oracle():
    start = time.perf_counter()
    pairs = phi_failures = 0
    psi_ok = True
    for n in (1, 2):
        for w in (1, 2, 3):
            u = Universe(tuple("xy"[:n]), w)
            every = list(enumerate_submsets(full_mset(u)))
            for a, b in itertools.product(every, repeat=2):
                pairs += 1
                psi_ok &= psi_downset(union(a, b)) == psi_downset(a) | psi_downset(b)
                psi_ok &= psi_downset(intersect(a, b)) == psi_downset(a) & psi_downset(b)
                phi_failures += phi(union(a, b)) != phi(a) | phi(b)
    elapsed = time.perf_counter() - start
    oracle_psi, _ = oracle.downset_is_homomorphism(2, 3)
    ok = psi_ok and oracle_psi and phi_failures > 0 and elapsed < 30
    report(5, "psi preserves both operations, phi breaks (1)", ok,
           f"{pairs} pairs, phi fails (1) on {phi_failures}, {elapsed:.2f}s")


def _laws_hold(a, b, c):
    u = a.universe
    full, empty = full_mset(u), empty_mset(u)
    return (a | b == b | a and a & b == b & a
            and (a | b) | c == a | (b | c) and (a & b) & c == a & (b & c)
            and a | a == a and a & a == a
            and a & (a | b) == a and a | (a & b) == a
            and a | empty == a and a & full == a
            and complement_global(complement_global(a)) == a
            and complement_global(a | b) == complement_global(a) & complement_global(b)
            and complement_global(a & b) == complement_global(a) | complement_global(b)
            and phi_inverse(phi(a)) == a
            and (phi(a) == phi(b)) == (a == b))


def _count_sum(a, parent):
    r = complement_relative(a, parent)
    return all(x + y == p for x, y, p in zip(a.vector, r.vector, parent.vector))


def test_criterion_6_algebraic_properties():
    exhaustive = 0
    ok = True
    for n in (1, 2):
        for w in (1, 2, 3):
            u = Universe(tuple("xy"[:n]), w)
            every = list(enumerate_submsets(full_mset(u)))
            ok &= len({phi(m) for m in every}) == len(every)
            for a, b, c in itertools.product(every, repeat=3):
                exhaustive += 1
                ok &= _laws_hold(a, b, c)
            for a, parent in itertools.product(every, repeat=2):
                if is_submset(a, parent):
                    ok &= _count_sum(a, parent)
    rng = random.Random(20261016)
    u = Universe(("a", "b", "c", "d", "e"), 8)
    randomized = 10_000
    for _ in range(randomized):
        a, b, c = (Mset(u, [rng.randint(0, 8) for _ in range(5)]) for _ in range(3))
        ok &= _laws_hold(a, b, c)
        ok &= _count_sum(a & b, b)
    report(6, "algebraic property suite", ok,
           f"{exhaustive} exhaustive triples, {randomized} random triples at |X|=5, omega=8")


def _strip_comments(text):
    lines = [line.split("--")[0].rstrip() for line in text.splitlines()]
    return [line for line in lines if line]


def test_criterion_7_dsl_differential_and_round_trip():
    rng = random.Random(7)
    n_exprs = 1000
    diff_ok = True
    for _ in range(n_exprs):
        n, w = rng.randint(1, 3), rng.randint(1, 5)
        u = Universe(tuple("xyz"[:n]), w)
        node, expected = random_expr(rng, u, depth=rng.randint(1, 4))
        text = format_ast(node)
        diff_ok &= parse_expr(text) == node
        got = run_script(text, Env(u.elements, u.omega))[0][-1][1]
        both_empty = (not len(expected) if not isinstance(expected, Mset) else expected.is_empty()) and \
                     (not len(got) if not isinstance(got, Mset) else got.is_empty())
        diff_ok &= got == expected or both_empty

    round_trip_ok = True
    for _, _, value in EXAMPLE1_FIXTURES:
        env = Env(("x", "y", "z"), 4)
        round_trip_ok &= run_script(format_value(value), env)[0][-1][1] == value

    script = str(files("mtop") / "data" / "example1.mtop")
    _, eval_text = cli("eval", script)
    _, example_text = cli("example1")
    _, eval_json = cli("eval", script, "--format", "json")
    _, example_json = cli("example1", "--format", "json")
    outputs = {o["name"]: o["value"] for o in json.loads(eval_json)["outputs"]}
    ex = json.loads(example_json)
    json_same = all(outputs[v["name"]] == v["value"] for v in ex["values"])
    json_same &= all(outputs[r["name"]] == {k: v for k, v in r.items() if k != "name"}
                     for r in ex["identities"])
    text_same = _strip_comments(eval_text) == _strip_comments(example_text)
    ok = diff_ok and round_trip_ok and json_same and text_same
    report(7, "DSL differential, round trip, eval == example1", ok,
           f"{n_exprs} random expressions, {len(EXAMPLE1_FIXTURES)} fixture round trips, "
           f"text equal={text_same}, json equal={json_same}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
