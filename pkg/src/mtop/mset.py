"""Bounded multisets over a finite ground set.

An :class:`Mset` stores one count per element of its :class:`Universe`, in the
universe's canonical (sorted) element order. Counts range over ``0..omega``;
zero means "absent", so the stored vector is already the canonical form and
equality is plain tuple equality.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import CountExceedsOmega, NotSubmset, UniverseMismatch, UnknownElement

__all__ = [
    "Universe",
    "Mset",
    "make_mset",
    "empty_mset",
    "full_mset",
    "union",
    "intersect",
    "complement_global",
    "complement_relative",
    "difference",
    "is_submset",
    "enumerate_submsets",
    "submset_rank",
    "count_submsets",
]


@dataclass(frozen=True)
class Universe:
    """Ground set ``X`` together with the multiplicity bound ``omega``."""

    elements: tuple[str, ...]
    omega: int
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("a universe needs at least one element")
        for e in elements:
            if not isinstance(e, str) or not e:
                raise ValueError(f"element names must be nonempty strings, got {e!r}")
        if len(set(elements)) != len(elements):
            raise ValueError(f"duplicate element names in {elements!r}")
        if isinstance(self.omega, bool) or not isinstance(self.omega, int) or self.omega < 1:
            raise ValueError(f"omega must be a positive integer, got {self.omega!r}")
        elements = tuple(sorted(elements))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, element) -> bool:
        return element in self._index

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except (KeyError, TypeError):
            raise UnknownElement(f"{element!r} is not an element of {list(self.elements)}") from None

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "omega": self.omega}

    @classmethod
    def from_json(cls, data: Mapping) -> "Universe":
        return cls(tuple(data["elements"]), data["omega"])


class Mset:
    """A multiset over ``universe`` with every count at most ``universe.omega``.

    Instances are immutable. Use :func:`make_mset` to build one from a mapping;
    the constructor takes an already validated count vector.
    """

    __slots__ = ("universe", "vector", "__weakref__")

    def __init__(self, universe: Universe, vector: Iterable[int]):
        vector = tuple(vector)
        if len(vector) != len(universe):
            raise ValueError(f"expected {len(universe)} counts, got {len(vector)}")
        for e, c in zip(universe.elements, vector):
            if isinstance(c, bool) or not isinstance(c, int) or c < 0:
                raise ValueError(f"count for {e!r} must be a nonnegative integer, got {c!r}")
            if c > universe.omega:
                raise CountExceedsOmega(f"count {c} for {e!r} exceeds omega={universe.omega}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "vector", vector)

    def __setattr__(self, name, value):
        raise AttributeError("Mset is immutable")

    def count(self, element: str) -> int:
        return self.vector[self.universe.index(element)]

    @property
    def counts(self) -> dict[str, int]:
        """Nonzero counts keyed by element, in canonical order."""
        return {e: c for e, c in zip(self.universe.elements, self.vector) if c}

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(e for e, c in zip(self.universe.elements, self.vector) if c)

    def is_empty(self) -> bool:
        return not any(self.vector)

    def cardinality(self) -> int:
        return sum(self.vector)

    def sort_key(self) -> tuple[int, ...]:
        # lexicographic on the count vector == mixed-radix enumeration order
        return self.vector

    def __eq__(self, other):
        if not isinstance(other, Mset):
            return NotImplemented
        return self.universe == other.universe and self.vector == other.vector

    def __hash__(self):
        return hash((self.universe, self.vector))

    def __or__(self, other):
        return union(self, other) if isinstance(other, Mset) else NotImplemented

    def __and__(self, other):
        return intersect(self, other) if isinstance(other, Mset) else NotImplemented

    def __sub__(self, other):
        return difference(self, other) if isinstance(other, Mset) else NotImplemented

    def __invert__(self):
        return complement_global(self)

    def __le__(self, other):
        return is_submset(self, other) if isinstance(other, Mset) else NotImplemented

    def __ge__(self, other):
        return is_submset(other, self) if isinstance(other, Mset) else NotImplemented

    def __str__(self):
        return "{" + ",".join(f"{c}/{e}" for e, c in self.counts.items()) + "}"

    def __repr__(self):
        return f"Mset({self})"

    def __reduce__(self):
        return (Mset, (self.universe, self.vector))

    def to_json(self) -> dict:
        return {"elements": list(self.universe.elements), "omega": self.universe.omega,
                "counts": self.counts}

    @classmethod
    def from_json(cls, data: Mapping, universe: Universe | None = None) -> "Mset":
        u = Universe.from_json(data)
        if universe is not None and u != universe:
            raise UniverseMismatch(f"mset universe {u} differs from {universe}")
        return make_mset(u, data.get("counts", {}))


def make_mset(universe: Universe, raw_counts: Mapping[str, int]) -> Mset:
    """Build the canonical mset for ``raw_counts``; zero counts are dropped."""
    vector = [0] * len(universe)
    for element, c in raw_counts.items():
        i = universe.index(element)
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise ValueError(f"count for {element!r} must be a nonnegative integer, got {c!r}")
        if c > universe.omega:
            raise CountExceedsOmega(f"count {c} for {element!r} exceeds omega={universe.omega}")
        vector[i] = c
    return Mset(universe, vector)


def empty_mset(universe: Universe) -> Mset:
    return Mset(universe, (0,) * len(universe))


def full_mset(universe: Universe) -> Mset:
    """The top element of ``[X]^omega``: every element at count omega."""
    return Mset(universe, (universe.omega,) * len(universe))


def _same_universe(a: Mset, b: Mset) -> Universe:
    if a.universe != b.universe:
        raise UniverseMismatch(f"msets over different universes: {a.universe} vs {b.universe}")
    return a.universe


def union(a: Mset, b: Mset) -> Mset:
    u = _same_universe(a, b)
    return Mset(u, map(max, a.vector, b.vector))


def intersect(a: Mset, b: Mset) -> Mset:
    u = _same_universe(a, b)
    return Mset(u, map(min, a.vector, b.vector))


def complement_global(m: Mset) -> Mset:
    """Complement in ``[X]^omega``: count ``omega - c`` at every element."""
    w = m.universe.omega
    return Mset(m.universe, (w - c for c in m.vector))


def complement_relative(m: Mset, parent: Mset) -> Mset:
    """Complement of ``m`` inside ``parent``, clamped at zero."""
    u = _same_universe(m, parent)
    return Mset(u, (max(p - c, 0) for c, p in zip(m.vector, parent.vector)))


def difference(a: Mset, b: Mset) -> Mset:
    """Clamped difference ``a - b``, i.e. ``complement_relative(b, a)``."""
    return complement_relative(b, a)


def is_submset(a: Mset, b: Mset) -> bool:
    _same_universe(a, b)
    return all(x <= y for x, y in zip(a.vector, b.vector))


def count_submsets(parent: Mset) -> int:
    return math.prod(c + 1 for c in parent.vector)


def enumerate_submsets(parent: Mset) -> Iterator[Mset]:
    """Yield every submset of ``parent`` in mixed-radix order, last element fastest."""
    u = parent.universe
    for vec in itertools.product(*(range(c + 1) for c in parent.vector)):
        yield Mset(u, vec)


def submset_rank(m: Mset, parent: Mset) -> int:
    """Position of ``m`` in ``enumerate_submsets(parent)``."""
    if not is_submset(m, parent):
        raise NotSubmset(f"{m} is not a submset of {parent}")
    rank = 0
    for c, p in zip(m.vector, parent.vector):
        rank = rank * (p + 1) + c
    return rank
