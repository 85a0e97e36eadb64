"""Identity checks, the Example 1 reproduction, and minimal-counterexample search.

The three identities compare an mset operation pushed through ``phi`` with the
matching set operation on the images:

* ``U1``: ``phi(a | b) == phi(a) | phi(b)``
* ``I2``: ``phi(a & b) == phi(a) & phi(b)``
* ``C3``: ``phi(complement(a)) == complement_in(phi(a), ambient)``

Searches walk a fixed global order (universe size, omega, parent, operands) so
the reported witness is the least failing input, whatever the worker count.
"""
from __future__ import annotations

import enum
import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Iterator, Mapping, Sequence

from .embed import (AmbientSpec, CofinitePairSet, FiniteGrid, NatGrid, PairSet,
                    PhiOf, complement_in, phi)
from .errors import BudgetExceeded, MissingSecondOperand, NotSubmset
from .mset import (Mset, Universe, complement_global, complement_relative,
                   enumerate_submsets, full_mset, intersect,
                   is_submset, make_mset, submset_rank, union)
from .topology import (MFamily, Verdict, generate_m_topology, image_family,
                       is_m_topology, is_point_topology)

__all__ = [
    "Identity",
    "LhsVariant",
    "Ambient",
    "IdentitySpec",
    "IdentityReport",
    "SearchBounds",
    "Witness",
    "check_identity",
    "check_identity_nary",
    "resolve_ambient",
    "standard_universe",
    "search_min_counterexample",
    "search_topology_counterexample",
    "replay_witness",
    "reproduce_example1",
    "Example1Report",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2_000_000
_NAMES = "xyzwvutsrqponmlkjihgfedcba"


class Identity(str, enum.Enum):
    U1 = "U1"
    I2 = "I2"
    C3 = "C3"


class LhsVariant(str, enum.Enum):
    GLOBAL = "global"
    RELATIVE = "relative"


class Ambient(str, enum.Enum):
    """Symbolic ambients, resolved against the parent at check time."""

    PHI_PARENT = "phiU"
    PHI_FULL = "phiFull"
    GRID = "grid"
    NAT = "nat"


@dataclass(frozen=True)
class IdentitySpec:
    which: Identity
    lhs_variant: LhsVariant | None = None
    ambient: Ambient | PhiOf | None = None

    def __post_init__(self):
        object.__setattr__(self, "which", Identity(self.which))
        if self.which is Identity.C3:
            if self.lhs_variant is None or self.ambient is None:
                raise ValueError("C3 needs both an lhs variant and an ambient")
            object.__setattr__(self, "lhs_variant", LhsVariant(self.lhs_variant))
            if not isinstance(self.ambient, PhiOf):
                object.__setattr__(self, "ambient", Ambient(self.ambient))
        elif self.lhs_variant is not None or self.ambient is not None:
            raise ValueError(f"{self.which.value} takes no lhs variant or ambient")

    @property
    def binary(self) -> bool:
        return self.which is not Identity.C3

    def label(self) -> str:
        if self.binary:
            return self.which.value
        amb = self.ambient.value if isinstance(self.ambient, Ambient) else f"phi({self.ambient.mset})"
        return f"C3[{self.lhs_variant.value},{amb}]"

    def to_json(self) -> dict:
        d: dict[str, Any] = {"which": self.which.value}
        if not self.binary:
            d["lhs"] = self.lhs_variant.value
            if isinstance(self.ambient, PhiOf):
                d["ambient"] = {"phi_of": self.ambient.mset.to_json()}
            else:
                d["ambient"] = self.ambient.value
        return d

    @classmethod
    def from_json(cls, data: Mapping) -> "IdentitySpec":
        if data["which"] != Identity.C3.value:
            return cls(data["which"])
        amb = data["ambient"]
        if isinstance(amb, Mapping):
            amb = PhiOf(Mset.from_json(amb["phi_of"]))
        return cls(Identity.C3, data["lhs"], amb)


@dataclass(frozen=True)
class IdentityReport:
    spec: IdentitySpec
    inputs: dict
    lhs: PairSet
    rhs: PairSet | CofinitePairSet
    holds: bool
    first_difference: tuple[str, int] | None

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "inputs": {k: (v.to_json() if v is not None else None) for k, v in self.inputs.items()},
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "holds": self.holds,
            "first_difference": list(self.first_difference) if self.first_difference else None,
        }


def resolve_ambient(ambient: Ambient | PhiOf, parent: Mset) -> AmbientSpec:
    if isinstance(ambient, PhiOf):
        return ambient
    u = parent.universe
    return {
        Ambient.PHI_PARENT: lambda: PhiOf(parent),
        Ambient.PHI_FULL: lambda: PhiOf(full_mset(u)),
        Ambient.GRID: lambda: FiniteGrid(u),
        Ambient.NAT: lambda: NatGrid(u),
    }[Ambient(ambient)]()


def _report(spec, inputs, lhs, rhs) -> IdentityReport:
    holds = lhs == rhs
    diff = None
    if not holds and isinstance(rhs, PairSet):
        diff = min((lhs ^ rhs).pairs)
    return IdentityReport(spec, inputs, lhs, rhs, holds, diff)


def check_identity(spec: IdentitySpec, m1: Mset, m2: Mset | None, parent: Mset) -> IdentityReport:
    """Evaluate both sides of one identity on concrete operands."""
    if spec.binary:
        if m2 is None:
            raise MissingSecondOperand(f"identity {spec.which.value} needs two operands")
        for m in (m1, m2):
            if not is_submset(m, parent):
                raise NotSubmset(f"{m} is not a submset of the parent {parent}")
        inputs = {"m1": m1, "m2": m2, "parent": parent}
        if spec.which is Identity.U1:
            return _report(spec, inputs, phi(union(m1, m2)), phi(m1) | phi(m2))
        return _report(spec, inputs, phi(intersect(m1, m2)), phi(m1) & phi(m2))

    if m2 is not None:
        raise ValueError("identity C3 takes a single operand")
    if spec.lhs_variant is LhsVariant.RELATIVE:
        if not is_submset(m1, parent):
            raise NotSubmset(f"{m1} is not a submset of the parent {parent}")
        lhs = phi(complement_relative(m1, parent))
    else:
        lhs = phi(complement_global(m1))
    rhs = complement_in(phi(m1), resolve_ambient(spec.ambient, parent))
    return _report(spec, {"m1": m1, "m2": None, "parent": parent}, lhs, rhs)


def check_identity_nary(spec: IdentitySpec, msets: Sequence[Mset], parent: Mset) -> IdentityReport:
    """Union/intersection identity over a finite index set, by folding."""
    if not spec.binary:
        raise ValueError("only U1 and I2 have an n-ary form")
    if len(msets) < 2:
        raise MissingSecondOperand("need at least two operands")
    for m in msets:
        if not is_submset(m, parent):
            raise NotSubmset(f"{m} is not a submset of the parent {parent}")
    images = [phi(m) for m in msets]
    inputs = {f"m{i + 1}": m for i, m in enumerate(msets)}
    inputs["parent"] = parent
    if spec.which is Identity.U1:
        return _report(spec, inputs, phi(reduce(union, msets)), reduce(PairSet.__or__, images))
    return _report(spec, inputs, phi(reduce(intersect, msets)), reduce(PairSet.__and__, images))


# -- search -------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBounds:
    max_elements: int
    max_omega: int
    exhaustive: bool = True
    seed: int = 0
    trials: int = 0
    budget: int = DEFAULT_BUDGET
    max_subbasis: int = 2

    def __post_init__(self):
        if self.max_elements < 1 or self.max_omega < 1:
            raise ValueError("bounds must be positive")
        if self.max_elements > len(_NAMES):
            raise ValueError(f"at most {len(_NAMES)} elements supported")
        if not self.exhaustive and self.trials < 1:
            raise ValueError("randomized mode needs trials >= 1")

    def universes(self) -> Iterator[tuple[int, int]]:
        for n in range(1, self.max_elements + 1):
            for w in range(1, self.max_omega + 1):
                yield n, w

    def to_json(self) -> dict:
        d = {"max_elements": self.max_elements, "max_omega": self.max_omega}
        if self.exhaustive:
            d["mode"] = "exhaustive"
        else:
            d.update(mode="randomized", seed=self.seed, trials=self.trials)
        return d


@dataclass(frozen=True)
class Witness:
    """A failing input, least in the global enumeration order."""

    kind: str  # "identity" or "topology"
    universe: Universe
    parent: Mset
    msets: dict
    order_key: tuple
    report: IdentityReport | None = None
    verdicts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d: dict[str, Any] = {
            "kind": self.kind,
            "universe": self.universe.to_json(),
            "parent": self.parent.to_json(),
            "order_key": list(self.order_key),
        }
        if self.kind == "identity":
            d["spec"] = self.report.spec.to_json()
            d["m1"] = self.msets["m1"].to_json()
            d["m2"] = self.msets["m2"].to_json() if self.msets.get("m2") is not None else None
            d["report"] = self.report.to_json()
        else:
            fam = self.msets["family"]
            d["subbasis"] = [m.to_json() for m in self.msets["subbasis"]]
            d["family"] = fam.to_json()
            d["image"] = image_family(fam).to_json()
            d["verdicts"] = {k: v.to_json() for k, v in self.verdicts.items()}
        return d


def replay_witness(data: Mapping) -> IdentityReport | dict[str, Verdict]:
    """Re-run the check recorded in a serialized witness."""
    if data.get("kind", "identity") == "topology":
        fam = MFamily.from_json(data["family"])
        return {"m_topology": is_m_topology(fam), "image": is_point_topology(image_family(fam))}
    spec = IdentitySpec.from_json(data["spec"])
    parent = Mset.from_json(data["parent"])
    m1 = Mset.from_json(data["m1"], parent.universe)
    m2 = Mset.from_json(data["m2"], parent.universe) if data.get("m2") else None
    return check_identity(spec, m1, m2, parent)


def standard_universe(n: int, omega: int) -> Universe:
    """Universe of ``n`` elements named x, y, z, w, ... with bound ``omega``."""
    return Universe(tuple(_NAMES[:n]), omega)


def _identity_work(spec: IdentitySpec, n: int, w: int) -> int:
    # number of (parent, operands) tuples in one universe
    power = 2 if spec.binary else 1
    return sum((c + 1) ** power for c in range(w + 1)) ** n


def _topology_work(bounds: SearchBounds, n: int, w: int) -> int:
    total = 0
    for vec in itertools.product(range(w + 1), repeat=n):
        size = math.prod(c + 1 for c in vec)
        total += sum(math.comb(size, k) for k in range(bounds.max_subbasis + 1))
    return total


def _check_budget(bounds: SearchBounds, work) -> None:
    if not bounds.exhaustive:
        return
    parents = (bounds.max_omega + 1) ** bounds.max_elements
    if parents > bounds.budget:
        raise BudgetExceeded(f"{parents} parents per universe exceeds budget {bounds.budget}")
    total = 0
    for n, w in bounds.universes():
        total += work(n, w)
        if total > bounds.budget:
            raise BudgetExceeded(f"exhaustive search needs more than {bounds.budget} candidate checks")


def _scan_identity_universe(spec: IdentitySpec, n: int, w: int):
    u = standard_universe(n, w)
    for p_rank, parent in enumerate(enumerate_submsets(full_mset(u))):
        subs = list(enumerate_submsets(parent))
        for i, m1 in enumerate(subs):
            if spec.binary:
                for j, m2 in enumerate(subs):
                    rep = check_identity(spec, m1, m2, parent)
                    if not rep.holds:
                        return Witness("identity", u, parent, {"m1": m1, "m2": m2},
                                       (n, w, p_rank, i, j), rep)
            else:
                rep = check_identity(spec, m1, None, parent)
                if not rep.holds:
                    return Witness("identity", u, parent, {"m1": m1, "m2": None},
                                   (n, w, p_rank, i), rep)
    return None


def _scan_topology_universe(max_subbasis: int, n: int, w: int):
    u = standard_universe(n, w)
    for p_rank, parent in enumerate(enumerate_submsets(full_mset(u))):
        subs = list(enumerate_submsets(parent))
        seen = set()
        for k in range(max_subbasis + 1):
            for combo in itertools.combinations(range(len(subs)), k):
                subbasis = [subs[i] for i in combo]
                fam = generate_m_topology(subbasis, parent)
                if fam in seen:
                    continue
                seen.add(fam)
                mv = is_m_topology(fam)
                pv = is_point_topology(image_family(fam))
                if mv.holds and not pv.holds:
                    return Witness("topology", u, parent,
                                   {"subbasis": subbasis, "family": fam},
                                   (n, w, p_rank, k) + combo, None,
                                   {"m_topology": mv, "image": pv})
    return None


def _first_in_order(scan, args_list, jobs: int):
    if jobs <= 1:
        for args in args_list:
            found = scan(*args)
            if found is not None:
                return found
        return None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(scan, *args) for args in args_list]
        # universes are disjoint key ranges in order, so the first hit in order is the minimum
        for fut in futures:
            found = fut.result()
            if found is not None:
                for rest in futures:
                    rest.cancel()
                return found
    return None


def _random_submset(rng: random.Random, parent: Mset) -> Mset:
    return Mset(parent.universe, (rng.randint(0, c) for c in parent.vector))


def _randomized_identity(spec: IdentitySpec, bounds: SearchBounds):
    rng = random.Random(bounds.seed)
    best = None
    for _ in range(bounds.trials):
        n = rng.randint(1, bounds.max_elements)
        w = rng.randint(1, bounds.max_omega)
        u = standard_universe(n, w)
        parent = _random_submset(rng, full_mset(u))
        m1 = _random_submset(rng, parent)
        m2 = _random_submset(rng, parent) if spec.binary else None
        rep = check_identity(spec, m1, m2, parent)
        if rep.holds:
            continue
        key = (n, w, submset_rank(parent, full_mset(u)), submset_rank(m1, parent))
        if spec.binary:
            key += (submset_rank(m2, parent),)
        if best is None or key < best.order_key:
            best = Witness("identity", u, parent, {"m1": m1, "m2": m2}, key, rep)
    return best


def search_min_counterexample(spec: IdentitySpec, bounds: SearchBounds, jobs: int = 1) -> Witness | None:
    """Least failing input for ``spec`` within ``bounds``, or ``None``.

    Randomized mode returns the least failing sample drawn, which is
    reproducible for a fixed seed but not necessarily the global minimum.
    """
    if not bounds.exhaustive:
        return _randomized_identity(spec, bounds)
    _check_budget(bounds, lambda n, w: _identity_work(spec, n, w))
    return _first_in_order(_scan_identity_universe,
                           [(spec, n, w) for n, w in bounds.universes()], jobs)


def search_topology_counterexample(bounds: SearchBounds, jobs: int = 1) -> Witness | None:
    """First subbasis-generated M-topology whose phi-image is not a topology."""
    if not bounds.exhaustive:
        raise ValueError("topology search is exhaustive only")
    _check_budget(bounds, lambda n, w: _topology_work(bounds, n, w))
    return _first_in_order(_scan_topology_universe,
                           [(bounds.max_subbasis, n, w) for n, w in bounds.universes()], jobs)


# -- Example 1 ----------------------------------------------------------------

EXAMPLE1_UNIVERSE = Universe(("x", "y", "z"), 4)


def _m(**counts) -> Mset:
    return make_mset(EXAMPLE1_UNIVERSE, counts)


def _p(*pairs) -> PairSet:
    return PairSet(EXAMPLE1_UNIVERSE, pairs)


EXAMPLE1_INPUTS = {
    "U": _m(x=4, y=3, z=2),
    "V": _m(x=4, y=4, z=4),
    "M1": _m(x=4, y=3),
    "M2": _m(x=2, y=3),
}

# (name, label, expected) in the order the example computes them
EXAMPLE1_FIXTURES = [
    ("M1_join_M2", "M₁⊔M₂", _m(x=4, y=3)),
    ("M1_meet_M2", "M₁⊓M₂", _m(x=2, y=3)),
    ("M2_delta", "M₂^Δ", _m(x=2, y=1, z=4)),
    ("M2_delta_U", "(M₂^Δ)_U", _m(x=2, z=2)),
    ("phi_M1", "φ(M₁)", _p(("x", 4), ("y", 3))),
    ("phi_M2", "φ(M₂)", _p(("x", 2), ("y", 3))),
    ("phi_M1_cup_phi_M2", "φ(M₁)∪φ(M₂)", _p(("x", 4), ("x", 2), ("y", 3))),
    ("phi_M1_cap_phi_M2", "φ(M₁)∩φ(M₂)", _p(("y", 3))),
    ("phi_M1_join_M2", "φ(M₁⊔M₂)", _p(("x", 4), ("y", 3))),
    ("phi_M1_meet_M2", "φ(M₁⊓M₂)", _p(("x", 2), ("y", 3))),
    ("phi_M2_delta", "φ(M₂^Δ)", _p(("x", 2), ("y", 1), ("z", 4))),
    ("phi_M2_delta_U", "φ((M₂^Δ)_U)", _p(("x", 2), ("z", 2))),
    ("phi_U", "φ(U)", _p(("x", 4), ("y", 3), ("z", 2))),
    ("phi_V", "φ(V)", _p(("x", 4), ("y", 4), ("z", 4))),
    ("phiU_minus_phi_M2", "φ(U)∖φ(M₂)", _p(("x", 4), ("z", 2))),
    ("phiV_minus_phi_M2", "φ(V)∖φ(M₂)", _p(("x", 4), ("y", 4), ("z", 4))),
    ("nat_minus_phi_M2", "X×ℕ∖φ(M₂)", CofinitePairSet(_p(("x", 2), ("y", 3)))),
    ("grid_minus_phi_M2", "(X×{1,2,3,4})∖φ(M₂)",
     _p(("x", 1), ("x", 3), ("x", 4), ("y", 1), ("y", 2), ("y", 4),
        ("z", 1), ("z", 2), ("z", 3), ("z", 4))),
]

# (name, spec, operands) for the identity checks; C3 runs on M2 under every reading
EXAMPLE1_IDENTITIES = [("identity1", IdentitySpec(Identity.U1), ("M1", "M2")),
                       ("identity2", IdentitySpec(Identity.I2), ("M1", "M2"))] + [
    (f"identity3_{lhs.value}_{amb.value}", IdentitySpec(Identity.C3, lhs, amb), ("M2",))
    for lhs in LhsVariant for amb in Ambient
]


@dataclass(frozen=True)
class Example1Entry:
    name: str
    label: str
    value: Any
    expected: Any

    @property
    def matched(self) -> bool:
        return self.value == self.expected


@dataclass(frozen=True)
class Example1Report:
    inputs: dict
    values: list
    identities: list  # (name, IdentityReport)

    @property
    def all_matched(self) -> bool:
        return all(e.matched for e in self.values)

    def value(self, name: str):
        return next(e.value for e in self.values if e.name == name)

    def to_json(self) -> dict:
        return {
            "inputs": {k: v.to_json() for k, v in self.inputs.items()},
            "values": [{"name": e.name, "label": e.label, "value": e.value.to_json(),
                        "expected": e.expected.to_json(), "matched": e.matched}
                       for e in self.values],
            "identities": [{"name": name, **rep.to_json()} for name, rep in self.identities],
            "all_matched": self.all_matched,
        }


def reproduce_example1() -> Example1Report:
    U, V, M1, M2 = (EXAMPLE1_INPUTS[k] for k in ("U", "V", "M1", "M2"))
    u = EXAMPLE1_UNIVERSE
    computed = {
        "M1_join_M2": union(M1, M2),
        "M1_meet_M2": intersect(M1, M2),
        "M2_delta": complement_global(M2),
        "M2_delta_U": complement_relative(M2, U),
        "phi_M1": phi(M1),
        "phi_M2": phi(M2),
        "phi_M1_cup_phi_M2": phi(M1) | phi(M2),
        "phi_M1_cap_phi_M2": phi(M1) & phi(M2),
        "phi_M1_join_M2": phi(union(M1, M2)),
        "phi_M1_meet_M2": phi(intersect(M1, M2)),
        "phi_M2_delta": phi(complement_global(M2)),
        "phi_M2_delta_U": phi(complement_relative(M2, U)),
        "phi_U": phi(U),
        "phi_V": phi(V),
        "phiU_minus_phi_M2": complement_in(phi(M2), PhiOf(U)),
        "phiV_minus_phi_M2": complement_in(phi(M2), PhiOf(V)),
        "nat_minus_phi_M2": complement_in(phi(M2), NatGrid(u)),
        "grid_minus_phi_M2": complement_in(phi(M2), FiniteGrid(u)),
    }
    values = [Example1Entry(name, label, computed[name], expected)
              for name, label, expected in EXAMPLE1_FIXTURES]
    identities = []
    for name, spec, operands in EXAMPLE1_IDENTITIES:
        ms = [EXAMPLE1_INPUTS[o] for o in operands]
        identities.append((name, check_identity(spec, ms[0], ms[1] if len(ms) > 1 else None, U)))
    return Example1Report(dict(EXAMPLE1_INPUTS), values, identities)
