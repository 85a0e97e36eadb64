"""Bounded-multiset algebra, the pair embedding into X x N, and counterexample search."""
from .embed import (CofinitePairSet, FiniteGrid, NatGrid, PairSet, PhiOf,
                    complement_in, finite_grid, pair_difference,
                    pair_intersect, pair_union, phi, phi_inverse, psi_downset)
from .errors import (BudgetExceeded, CountExceedsOmega, MissingSecondOperand,
                     MtopError, NotAFunction, NotSubmset, NotWithinAmbient,
                     UniverseMismatch, UnknownElement)
from .mset import (Mset, Universe, complement_global, complement_relative,
                   difference, empty_mset, enumerate_submsets, full_mset,
                   intersect, is_submset, make_mset, union)
from .search import (Ambient, Identity, IdentityReport, IdentitySpec,
                     LhsVariant, SearchBounds, Witness, check_identity,
                     check_identity_nary, replay_witness, reproduce_example1,
                     search_min_counterexample, search_topology_counterexample)
from .topology import (MFamily, PairFamily, Verdict, enumerate_m_topologies,
                       generate_m_topology, image_family, is_m_topology,
                       is_point_topology)

__version__ = "0.1.0"

__all__ = [
    "Ambient",
    "BudgetExceeded",
    "check_identity",
    "check_identity_nary",
    "CofinitePairSet",
    "complement_global",
    "complement_in",
    "complement_relative",
    "CountExceedsOmega",
    "difference",
    "empty_mset",
    "enumerate_m_topologies",
    "enumerate_submsets",
    "finite_grid",
    "FiniteGrid",
    "full_mset",
    "generate_m_topology",
    "Identity",
    "IdentityReport",
    "IdentitySpec",
    "image_family",
    "intersect",
    "is_m_topology",
    "is_point_topology",
    "is_submset",
    "LhsVariant",
    "make_mset",
    "MFamily",
    "MissingSecondOperand",
    "Mset",
    "MtopError",
    "NatGrid",
    "NotAFunction",
    "NotSubmset",
    "NotWithinAmbient",
    "pair_difference",
    "pair_intersect",
    "pair_union",
    "PairFamily",
    "PairSet",
    "phi",
    "phi_inverse",
    "PhiOf",
    "psi_downset",
    "replay_witness",
    "reproduce_example1",
    "search_min_counterexample",
    "search_topology_counterexample",
    "SearchBounds",
    "union",
    "Universe",
    "UniverseMismatch",
    "UnknownElement",
    "Verdict",
    "Witness",
]
