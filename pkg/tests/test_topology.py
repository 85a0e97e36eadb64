import random

import pytest

from mtop import (MFamily, NotSubmset, PairFamily, PairSet, Universe,
                  empty_mset, enumerate_m_topologies, enumerate_submsets,
                  full_mset, generate_m_topology, image_family, is_m_topology,
                  is_point_topology, make_mset)
from mtop.topology import (CARRIER_MISSING, EMPTY_MISSING,
                           INTERSECTION_NOT_CLOSED, MEMBER_OUTSIDE_CARRIER,
                           PARENT_MISSING, UNION_NOT_CLOSED)

from conftest import small_universes

X2 = Universe(("x",), 2)


def m(u, **c):
    return make_mset(u, c)


@pytest.fixture
def chain():
    return MFamily(m(X2, x=2), [m(X2), m(X2, x=1), m(X2, x=2)])


def test_chain_is_m_topology(chain):
    assert is_m_topology(chain).holds


def test_indiscrete_is_m_topology(example1):
    U = example1["U"]
    assert is_m_topology(MFamily(U, [empty_mset(U.universe), U])).holds


def test_example1_family_is_m_topology(example1):
    U, M1, M2 = example1["U"], example1["M1"], example1["M2"]
    fam = MFamily(U, [empty_mset(U.universe), M1, M2, U])
    assert is_m_topology(fam).holds


def test_m_topology_violations_in_check_order(example1):
    U, M1, M2 = example1["U"], example1["M1"], example1["M2"]
    e = empty_mset(U.universe)
    assert is_m_topology(MFamily(U, [U])).violation.axiom == EMPTY_MISSING
    assert is_m_topology(MFamily(U, [e])).violation.axiom == PARENT_MISSING
    a = m(U.universe, x=4)
    b = m(U.universe, y=3)
    v = is_m_topology(MFamily(U, [e, a, b, U])).violation
    assert v.axiom == UNION_NOT_CLOSED
    assert v.offending == m(U.universe, x=4, y=3)
    v = is_m_topology(MFamily(U, [e, M1, m(U.universe, x=2, y=3, z=2), U])).violation
    assert v.axiom == INTERSECTION_NOT_CLOSED
    assert v.offending == M2


def test_mfamily_rejects_non_submsets(example1):
    with pytest.raises(NotSubmset):
        MFamily(example1["M2"], [example1["M1"]])


def test_generate_indiscrete(example1):
    U = example1["U"]
    assert generate_m_topology([], U).members == {empty_mset(U.universe), U}


def test_generate_from_example1(example1):
    U, M1, M2 = example1["U"], example1["M1"], example1["M2"]
    fam = generate_m_topology([M1, M2], U)
    assert is_m_topology(fam).holds
    assert M1 | M2 in fam and M1 & M2 in fam
    assert fam.members == {empty_mset(U.universe), M1, M2, U}


def test_generate_discrete_single_point():
    u = Universe(("x",), 1)
    top = m(u, x=1)
    fam = generate_m_topology(list(enumerate_submsets(top)), top)
    assert fam.members == {m(u), top}


def test_generate_rejects_non_submset(example1):
    with pytest.raises(NotSubmset):
        generate_m_topology([example1["V"]], example1["U"])


def test_generate_always_topology_fuzz():
    rng = random.Random(7)
    for u in small_universes(2, 3):
        for _ in range(40):
            parent = make_mset(u, {e: rng.randint(0, u.omega) for e in u})
            subs = list(enumerate_submsets(parent))
            basis = rng.sample(subs, min(len(subs), rng.randint(0, 4)))
            fam = generate_m_topology(basis, parent)
            assert is_m_topology(fam).holds
            assert set(basis) <= fam.members


def test_image_family_of_chain(chain):
    img = image_family(chain)
    assert img.carrier == PairSet(X2, [("x", 2)])
    assert img.members == {PairSet(X2), PairSet(X2, [("x", 1)]), PairSet(X2, [("x", 2)])}


def test_image_family_of_indiscrete(example1):
    from mtop import phi
    U = example1["U"]
    img = image_family(MFamily(U, [empty_mset(U.universe), U]))
    assert img.members == {PairSet(U.universe), phi(U)}


def test_image_family_example1(example1, xyz4):
    U, M1, M2 = example1["U"], example1["M1"], example1["M2"]
    fam = MFamily(U, [empty_mset(xyz4), M1, M2, M1 | M2, M1 & M2, U])
    img = image_family(fam)
    assert PairSet(xyz4, [("x", 4), ("y", 3)]) in img
    assert PairSet(xyz4, [("x", 2), ("y", 3)]) in img


def test_point_topology_discrete_and_missing_union():
    u = Universe(("a", "b"), 1)
    e, A, B = PairSet(u), PairSet(u, [("a", 1)]), PairSet(u, [("b", 1)])
    AB = A | B
    assert is_point_topology(PairFamily(AB, [e, A, B, AB])).holds
    v = is_point_topology(PairFamily(AB, [e, A, B])).violation
    assert v.axiom == CARRIER_MISSING
    v = is_point_topology(PairFamily(A | B | PairSet(u, [("a", 2)]), [e, A, B, A | B | PairSet(u, [("a", 2)])])).violation
    assert v.axiom == UNION_NOT_CLOSED and v.offending == AB


def test_point_topology_member_outside_carrier(chain):
    v = is_point_topology(image_family(chain))
    assert not v.holds
    assert v.violation.axiom == MEMBER_OUTSIDE_CARRIER
    assert v.violation.offending == PairSet(X2, [("x", 1)])
    assert v.to_json()["violation"]["axiom"] == MEMBER_OUTSIDE_CARRIER


def test_point_topology_empty_missing():
    u = Universe(("a",), 1)
    A = PairSet(u, [("a", 1)])
    assert is_point_topology(PairFamily(A, [A])).violation.axiom == EMPTY_MISSING


def test_verdict_independent_of_member_order(example1):
    U = example1["U"]
    subs = list(enumerate_submsets(U))
    rng = random.Random(3)
    for _ in range(30):
        members = rng.sample(subs, 6) + [empty_mset(U.universe), U]
        first = is_m_topology(MFamily(U, members))
        rng.shuffle(members)
        assert is_m_topology(MFamily(U, members)) == first


def test_adding_members_never_repairs_missing_bottom(example1):
    U = example1["U"]
    subs = [s for s in enumerate_submsets(U) if not s.is_empty()]
    fam = MFamily(U, subs)
    assert is_m_topology(fam).violation.axiom == EMPTY_MISSING


def test_omega1_images_are_topologies_exhaustive():
    for n in (1, 2, 3):
        u = Universe(tuple("xyz"[:n]), 1)
        for parent in enumerate_submsets(full_mset(u)):
            for fam in enumerate_m_topologies(parent):
                assert is_point_topology(image_family(fam)).holds


def test_enumerate_m_topologies_counts():
    # chain of length 3 over {2/x}: {∅,2/x} and {∅,1/x,2/x}
    assert len(list(enumerate_m_topologies(m(X2, x=2)))) == 2
    # |X|=2, omega=1, parent full: the topologies on a 2-point set
    u = Universe(("x", "y"), 1)
    assert len(list(enumerate_m_topologies(full_mset(u)))) == 4


def test_mfamily_json_round_trip(chain):
    assert MFamily.from_json(chain.to_json()) == chain
