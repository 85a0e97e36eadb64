"""Finite M-topologies, their phi-images, and point-topology axiom checks.

On finite families closure under arbitrary unions reduces to pairwise closure,
so both checkers only look at pairs. Members are visited in canonical order,
which makes the reported violation independent of how the caller ordered them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .embed import PairSet, phi
from .errors import NotSubmset
from .mset import Mset, enumerate_submsets, empty_mset, is_submset

__all__ = [
    "MFamily",
    "PairFamily",
    "Violation",
    "Verdict",
    "is_m_topology",
    "is_point_topology",
    "generate_m_topology",
    "image_family",
    "enumerate_m_topologies",
]

EMPTY_MISSING = "EmptyMissing"
PARENT_MISSING = "ParentMissing"
CARRIER_MISSING = "CarrierMissing"
MEMBER_OUTSIDE_PARENT = "MemberOutsideParent"
MEMBER_OUTSIDE_CARRIER = "MemberOutsideCarrier"
UNION_NOT_CLOSED = "UnionNotClosed"
INTERSECTION_NOT_CLOSED = "IntersectionNotClosed"


class MFamily:
    """A finite family of submsets of ``parent``."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: Mset, members: Iterable[Mset]):
        members = frozenset(members)
        for m in members:
            if not is_submset(m, parent):
                raise NotSubmset(f"family member {m} is not a submset of {parent}")
        self.parent = parent
        self.members = members

    def sorted_members(self) -> list[Mset]:
        return sorted(self.members, key=Mset.sort_key)

    def __contains__(self, m) -> bool:
        return m in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, MFamily):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    def __hash__(self):
        return hash((self.parent, self.members))

    def __repr__(self):
        return f"MFamily(parent={self.parent}, members=[{', '.join(map(str, self.sorted_members()))}])"

    def to_json(self) -> dict:
        return {"parent": self.parent.to_json(),
                "members": [m.to_json() for m in self.sorted_members()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "MFamily":
        parent = Mset.from_json(data["parent"])
        return cls(parent, (Mset.from_json(m, parent.universe) for m in data["members"]))


class PairFamily:
    """A finite family of pair sets with an explicit carrier."""

    __slots__ = ("carrier", "members")

    def __init__(self, carrier: PairSet, members: Iterable[PairSet]):
        self.carrier = carrier
        self.members = frozenset(members)

    def sorted_members(self) -> list[PairSet]:
        return sorted(self.members, key=lambda p: (len(p), p.sort_key()))

    def __contains__(self, p) -> bool:
        return p in self.members

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, PairFamily):
            return NotImplemented
        return self.carrier == other.carrier and self.members == other.members

    def __repr__(self):
        return f"PairFamily(carrier={self.carrier}, members=[{', '.join(map(str, self.sorted_members()))}])"

    def to_json(self) -> dict:
        return {"carrier": self.carrier.to_json(),
                "members": [p.to_json() for p in self.sorted_members()]}


@dataclass(frozen=True)
class Violation:
    axiom: str
    members: tuple = ()
    offending: object = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "members": [m.to_json() for m in self.members],
            "offending": None if self.offending is None else self.offending.to_json(),
        }

    def __str__(self):
        s = self.axiom
        if self.members:
            s += " at " + ", ".join(map(str, self.members))
        if self.offending is not None:
            s += f" -> {self.offending}"
        return s


@dataclass(frozen=True)
class Verdict:
    holds: bool
    violation: Violation | None = None

    def __post_init__(self):
        if self.holds != (self.violation is None):
            raise ValueError("a verdict holds exactly when it carries no violation")

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds,
                "violation": None if self.violation is None else self.violation.to_json()}

    def __str__(self):
        return "holds" if self.holds else f"fails ({self.violation})"


def _closure_violation(members, join, meet, within, top, bottom, names):
    empty_name, top_name, outside_name = names
    present = set(members)
    if bottom not in present:
        return Violation(empty_name, (), bottom)
    if top not in present:
        return Violation(top_name, (), top)
    for m in members:
        if not within(m, top):
            return Violation(outside_name, (m,), m)
    for a, b in itertools.combinations(members, 2):
        j = join(a, b)
        if j not in present:
            return Violation(UNION_NOT_CLOSED, (a, b), j)
    for a, b in itertools.combinations(members, 2):
        j = meet(a, b)
        if j not in present:
            return Violation(INTERSECTION_NOT_CLOSED, (a, b), j)
    return None


def is_m_topology(fam: MFamily) -> Verdict:
    """Check ∅ and parent membership, then closure under union and intersection."""
    v = _closure_violation(
        fam.sorted_members(),
        lambda a, b: a | b,
        lambda a, b: a & b,
        is_submset,
        fam.parent,
        empty_mset(fam.parent.universe),
        (EMPTY_MISSING, PARENT_MISSING, MEMBER_OUTSIDE_PARENT),
    )
    return Verdict(v is None, v)


def is_point_topology(fam: PairFamily) -> Verdict:
    v = _closure_violation(
        fam.sorted_members(),
        lambda a, b: a | b,
        lambda a, b: a & b,
        PairSet.issubset,
        fam.carrier,
        PairSet(fam.carrier.universe),
        (EMPTY_MISSING, CARRIER_MISSING, MEMBER_OUTSIDE_CARRIER),
    )
    return Verdict(v is None, v)


def generate_m_topology(subbasis: Iterable[Mset], parent: Mset) -> MFamily:
    """Smallest M-topology on ``parent`` containing ``subbasis``."""
    subbasis = list(subbasis)
    for m in subbasis:
        if not is_submset(m, parent):
            raise NotSubmset(f"subbasis member {m} is not a submset of {parent}")
    seed = set(subbasis) | {empty_mset(parent.universe), parent}
    basis = _pairwise_closure(seed, lambda a, b: a & b)
    return MFamily(parent, _pairwise_closure(basis, lambda a, b: a | b))


def _pairwise_closure(items: set, op) -> set:
    closed = set(items)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = op(a, b)
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return closed


def image_family(fam: MFamily) -> PairFamily:
    return PairFamily(phi(fam.parent), (phi(m) for m in fam.members))


def enumerate_m_topologies(parent: Mset, max_inner: int = 16) -> Iterator[MFamily]:
    """Yield every M-topology on ``parent`` by brute force over all families.

    Only feasible for tiny parents; ``max_inner`` caps the number of proper,
    nonempty submsets (the search is ``2**inner``).
    """
    subs = list(enumerate_submsets(parent))
    bottom = empty_mset(parent.universe)
    inner = [m for m in subs if m != bottom and m != parent]
    if len(inner) > max_inner:
        raise ValueError(f"{len(inner)} inner submsets exceeds max_inner={max_inner}")
    for mask in range(1 << len(inner)):
        members = {bottom, parent}
        members.update(m for i, m in enumerate(inner) if mask >> i & 1)
        fam = MFamily(parent, members)
        if is_m_topology(fam).holds:
            yield fam
