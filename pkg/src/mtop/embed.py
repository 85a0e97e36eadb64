"""Embedding msets into ``X x N`` and set algebra on the resulting pair sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import (CountExceedsOmega, NotAFunction, NotWithinAmbient,
                     UniverseMismatch, UnknownElement)
from .mset import Mset, Universe, make_mset

__all__ = [
    "PairSet",
    "CofinitePairSet",
    "PhiOf",
    "FiniteGrid",
    "NatGrid",
    "AmbientSpec",
    "phi",
    "phi_inverse",
    "psi_downset",
    "pair_union",
    "pair_intersect",
    "pair_difference",
    "finite_grid",
    "complement_in",
    "pairset_from_json",
]

Pair = tuple[str, int]


class PairSet:
    """A finite subset of ``X x N``.

    Integers are not capped at omega here; only :func:`phi_inverse` enforces
    the bound.
    """

    __slots__ = ("universe", "_pairs", "__weakref__")

    def __init__(self, universe: Universe, pairs: Iterable[Pair] = ()):
        checked = set()
        for pair in pairs:
            element, k = pair
            if element not in universe:
                raise UnknownElement(f"{element!r} is not an element of {list(universe.elements)}")
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ValueError(f"pair integer must be a positive integer, got {k!r}")
            checked.add((element, k))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_pairs", frozenset(checked))

    def __setattr__(self, name, value):
        raise AttributeError("PairSet is immutable")

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return tuple(sorted(self._pairs))

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __contains__(self, pair) -> bool:
        return pair in self._pairs

    def __eq__(self, other):
        if isinstance(other, CofinitePairSet):
            return False
        if not isinstance(other, PairSet):
            return NotImplemented
        return self.universe == other.universe and self._pairs == other._pairs

    def __hash__(self):
        return hash((self.universe, self._pairs))

    def sort_key(self) -> tuple[Pair, ...]:
        return self.pairs

    def issubset(self, other: "PairSet | CofinitePairSet") -> bool:
        if isinstance(other, CofinitePairSet):
            return self._pairs.isdisjoint(other.excluded._pairs)
        return self._pairs <= other._pairs

    def __le__(self, other):
        if not isinstance(other, (PairSet, CofinitePairSet)):
            return NotImplemented
        return self.issubset(other)

    def _check(self, other):
        if self.universe != other.universe:
            raise UniverseMismatch("pair sets over different universes")

    def __or__(self, other):
        if not isinstance(other, PairSet):
            return NotImplemented
        self._check(other)
        return PairSet(self.universe, self._pairs | other._pairs)

    def __and__(self, other):
        if not isinstance(other, PairSet):
            return NotImplemented
        self._check(other)
        return PairSet(self.universe, self._pairs & other._pairs)

    def __sub__(self, other):
        if isinstance(other, CofinitePairSet):
            self._check(other)
            return PairSet(self.universe, self._pairs & other.excluded._pairs)
        if not isinstance(other, PairSet):
            return NotImplemented
        self._check(other)
        return PairSet(self.universe, self._pairs - other._pairs)

    def __xor__(self, other):
        if not isinstance(other, PairSet):
            return NotImplemented
        self._check(other)
        return PairSet(self.universe, self._pairs ^ other._pairs)

    def __str__(self):
        return "{" + ",".join(f"({e},{k})" for e, k in self.pairs) + "}"

    def __repr__(self):
        return f"PairSet({self})"

    def __reduce__(self):
        return (PairSet, (self.universe, self.pairs))

    def to_json(self) -> list:
        return [[e, k] for e, k in self.pairs]

    @classmethod
    def from_json(cls, universe: Universe, data: Iterable) -> "PairSet":
        return cls(universe, (tuple(p) for p in data))


class CofinitePairSet:
    """``(X x N) \\ excluded`` for a finite ``excluded``."""

    __slots__ = ("universe", "excluded")

    def __init__(self, excluded: PairSet):
        object.__setattr__(self, "universe", excluded.universe)
        object.__setattr__(self, "excluded", excluded)

    def __setattr__(self, name, value):
        raise AttributeError("CofinitePairSet is immutable")

    def __contains__(self, pair) -> bool:
        element, k = pair
        if element not in self.universe or not isinstance(k, int) or k < 1:
            return False
        return pair not in self.excluded

    def __len__(self):
        raise TypeError("a cofinite subset of X x N has no finite length")

    def __eq__(self, other):
        if isinstance(other, PairSet):
            return False
        if not isinstance(other, CofinitePairSet):
            return NotImplemented
        return self.excluded == other.excluded

    def __hash__(self):
        return hash(("cofinite", self.excluded))

    def complement(self) -> PairSet:
        return self.excluded

    def _check(self, other):
        if self.universe != other.universe:
            raise UniverseMismatch("pair sets over different universes")

    def __or__(self, other):
        self._check(other)
        if isinstance(other, CofinitePairSet):
            return CofinitePairSet(self.excluded & other.excluded)
        if isinstance(other, PairSet):
            return CofinitePairSet(self.excluded - other)
        return NotImplemented

    __ror__ = __or__

    def __and__(self, other):
        self._check(other)
        if isinstance(other, CofinitePairSet):
            return CofinitePairSet(self.excluded | other.excluded)
        if isinstance(other, PairSet):
            return other - self.excluded
        return NotImplemented

    __rand__ = __and__

    def __sub__(self, other):
        self._check(other)
        if isinstance(other, CofinitePairSet):
            return other.excluded - self.excluded
        if isinstance(other, PairSet):
            return CofinitePairSet(self.excluded | other)
        return NotImplemented

    def __str__(self):
        return f"nat \\ {self.excluded}"

    def __repr__(self):
        return f"CofinitePairSet(excluding={self.excluded})"

    def to_json(self) -> dict:
        return {"cofinite_excluding": self.excluded.to_json()}


def pairset_from_json(universe: Universe, data) -> PairSet | CofinitePairSet:
    if isinstance(data, Mapping):
        return CofinitePairSet(PairSet.from_json(universe, data["cofinite_excluding"]))
    return PairSet.from_json(universe, data)


# -- ambients -----------------------------------------------------------------

@dataclass(frozen=True)
class PhiOf:
    """Ambient ``phi(m)``."""

    mset: Mset

    def carrier(self) -> PairSet:
        return phi(self.mset)


@dataclass(frozen=True)
class FiniteGrid:
    """Ambient ``X x {1..omega}``."""

    universe: Universe

    def carrier(self) -> PairSet:
        return finite_grid(self.universe)


@dataclass(frozen=True)
class NatGrid:
    """Ambient ``X x N`` (infinite)."""

    universe: Universe


AmbientSpec = Union[PhiOf, FiniteGrid, NatGrid]


# -- embeddings ---------------------------------------------------------------

def phi(m: Mset) -> PairSet:
    """``{(x, count(m, x)) : count(m, x) >= 1}``"""
    return PairSet(m.universe, m.counts.items())


def psi_downset(m: Mset) -> PairSet:
    """``{(x, k) : 1 <= k <= count(m, x)}``"""
    return PairSet(m.universe, ((e, k) for e, c in m.counts.items() for k in range(1, c + 1)))


def phi_inverse(p: PairSet) -> Mset:
    counts: dict[str, int] = {}
    for element, k in p:
        if element in counts:
            raise NotAFunction(f"element {element!r} appears in more than one pair of {p}")
        if k > p.universe.omega:
            raise CountExceedsOmega(f"pair ({element},{k}) exceeds omega={p.universe.omega}")
        counts[element] = k
    return make_mset(p.universe, counts)


def finite_grid(universe: Universe) -> PairSet:
    return PairSet(universe, ((e, k) for e in universe for k in range(1, universe.omega + 1)))


def pair_union(a: PairSet, b: PairSet) -> PairSet:
    return a | b


def pair_intersect(a: PairSet, b: PairSet) -> PairSet:
    return a & b


def pair_difference(a: PairSet, b: PairSet) -> PairSet:
    return a - b


def complement_in(a: PairSet, ambient: AmbientSpec) -> PairSet | CofinitePairSet:
    """Complement of ``a`` relative to one of the ambient readings.

    ``PhiOf`` is a plain relative difference ``phi(m) \\ a``; ``a`` need not
    lie inside ``phi(m)``. ``FiniteGrid`` requires ``a`` to sit inside
    ``X x {1..omega}``. ``NatGrid`` gives the exact cofinite complement.
    """
    if isinstance(ambient, NatGrid):
        if ambient.universe != a.universe:
            raise UniverseMismatch("ambient and pair set over different universes")
        return CofinitePairSet(a)
    if isinstance(ambient, FiniteGrid):
        if ambient.universe != a.universe:
            raise UniverseMismatch("ambient and pair set over different universes")
        grid = ambient.carrier()
        if not a.issubset(grid):
            raise NotWithinAmbient(f"{a - grid} lies outside X x {{1..{a.universe.omega}}}")
        return grid - a
    if isinstance(ambient, PhiOf):
        return ambient.carrier() - a
    raise TypeError(f"not an ambient: {ambient!r}")
