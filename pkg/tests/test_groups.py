from fractions import Fraction

import pytest

from conewalls import _exact as ex
from conewalls.chambers import subdivide
from conewalls.cones import Strictness, cone_from_generators, contains, intersect_halfspace
from conewalls.errors import NotAnIsometryError, PairingError, StabilizerError
from conewalls.groups import (
    CERTIFIED,
    HEURISTIC,
    DirichletDomain,
    FacePairing,
    IsometryGroup,
    PairingEntry,
    chamber_orbits,
    check_isometry,
    dirichlet_domain,
    find_face_pairings,
    orbit,
    stabilizer_trivial,
    verify_tiling,
)
from conewalls.lattice import make_lattice

from fixtures_groups import reflection_rank2
from helpers import SWAP, U_GRAM

SWAP_T = ((0, 1), (1, 0))


@pytest.fixture
def u():
    return make_lattice(U_GRAM, [1, 1])


@pytest.fixture
def swap_group(u):
    return IsometryGroup(u, [SWAP])


def _reflection(L, v):
    n = L.rank
    e = ex.identity(n)
    return [[e[i][j] + L.pair(e[j], v) * v[i] for j in range(n)] for i in range(n)]


def _infinite_dihedral():
    # two (-2)-reflections of <[2,3],[3,2]>; their product has infinite order
    L = make_lattice([[2, 3], [3, 2]], [1, 0])
    return L, IsometryGroup(L, [_reflection(L, (1, -1)), _reflection(L, (1, -2))])


def test_check_isometry(u):
    assert check_isometry(u, SWAP)
    assert not check_isometry(u, [[1, 0], [0, -1]])
    assert not check_isometry(u, [[-1, 0], [0, -1]])
    assert not check_isometry(u, [[1, 0]])
    with pytest.raises(NotAnIsometryError):
        IsometryGroup(u, [[[-1, 0], [0, -1]]])


def test_orbit(swap_group):
    assert orbit(swap_group, (2, 1), 1) == {(2, 1), (1, 2)}
    assert orbit(swap_group, (2, 1), 0) == {(2, 1)}
    assert orbit(swap_group, (1, 1), 5) == {(1, 1)}


def test_stabilizer(swap_group):
    s = stabilizer_trivial(swap_group, (1, 1), 3)
    assert s.status == "NonTrivialWitness" and s.witness.matrix == SWAP_T
    assert stabilizer_trivial(swap_group, (2, 1), 1).status == "Trivial"
    _, G = _infinite_dihedral()
    assert stabilizer_trivial(G, (1, 0), 3).status == "UnknownAtDepth"


def test_group_words_are_isometries():
    L, G = _infinite_dihedral()
    els, closed = G.elements(6)
    assert not closed
    for el in els:
        assert check_isometry(L, el.matrix)
        M = ex.identity(L.rank)
        letters = dict(G.letters)
        for name in el.word:
            M = ex.mat_mul(M, letters[name])
        assert M == el.matrix


def test_dirichlet_swap(u, swap_group):
    amb = cone_from_generators(u, [(1, 0), (0, 1)])
    D = dirichlet_domain(swap_group, amb, (2, 1), 4)
    assert D.domain == cone_from_generators(u, [(1, 0), (1, 1)])
    assert D.status == CERTIFIED
    assert [e.matrix for e in D.contributing_elements] == [SWAP_T]
    with pytest.raises(StabilizerError):
        dirichlet_domain(swap_group, amb, (1, 1), 4)


def test_dirichlet_trivial_group(u):
    amb = cone_from_generators(u, [(1, 0), (0, 1)])
    D = dirichlet_domain(IsometryGroup(u, []), amb, (2, 1), 3)
    assert D.domain == amb and D.status == CERTIFIED
    rep = verify_tiling(D, IsometryGroup(u, []), 50, 2, seed=1)
    assert rep.cover_fraction == 1


def test_dirichlet_infinite_group_is_heuristic():
    L, G = _infinite_dihedral()
    amb = cone_from_generators(L, [(-1, 4), (4, -1)])
    D = dirichlet_domain(G, amb, (1, 0), 6)
    assert D.status == HEURISTIC
    assert contains(D.domain, (1, 0), Strictness.RELATIVE_INTERIOR)
    for el in G.elements(D.depth)[0][1:]:
        w = tuple(a - b for a, b in zip(ex.mat_vec(el.matrix, (1, 0)), (1, 0)))
        assert all(L.pair(w, g) >= 0 for g in D.domain.generators)


def test_tiling_detects_shrunk_domain(u, swap_group):
    amb = cone_from_generators(u, [(1, 0), (0, 1)])
    D = dirichlet_domain(swap_group, amb, (2, 1), 4)
    rep = verify_tiling(D, swap_group, 100, 1, seed=3)
    assert rep.cover_fraction == 1 and rep.collisions == 0
    assert sum(rep.witnesses.values()) == 100
    # cut away the part between (2, 1) and (1, 1)
    shrunk = intersect_halfspace(D.domain, (2, -1), "<=0")
    bad = DirichletDomain(D.basepoint, shrunk, (), D.status, D.depth, amb)
    rep = verify_tiling(bad, swap_group, 100, 1, seed=3)
    assert rep.cover_fraction < 1 and rep.uncovered


def test_tiling_is_seeded(u, swap_group):
    amb = cone_from_generators(u, [(1, 0), (0, 1)])
    D = dirichlet_domain(swap_group, amb, (3, 1), 4)
    a = verify_tiling(D, swap_group, 40, 1, seed=11)
    b = verify_tiling(D, swap_group, 40, 1, seed=11)
    assert a.witnesses == b.witnesses


def test_find_face_pairings(u, swap_group):
    pi = cone_from_generators(u, [(2, 1), (1, 2)])
    fp = find_face_pairings(pi, swap_group, 3)
    assert fp.entries == () and sorted(fp.unpaired) == sorted(pi.facets)
    fp = find_face_pairings(pi, IsometryGroup(u, []), 3)
    assert len(fp.unpaired) == 2


def test_fundamental_chamber_of_reflection_group():
    L, G = _infinite_dihedral()
    pi = cone_from_generators(L, [(1, 1), (-1, 4)])
    fp = find_face_pairings(pi, G, 2)
    assert fp.unpaired == () and len(fp.entries) == 2
    res = chamber_orbits(subdivide(pi, []), fp, [], G, 4)
    assert res.count == 1 and res.status == CERTIFIED


def test_chamber_orbits_examples(u, swap_group):
    pi = cone_from_generators(u, [(2, 1), (1, 2)])
    single = subdivide(pi, [])
    assert chamber_orbits(single, FacePairing(pi, ()), [], None, 3).count == 1
    two = subdivide(pi, [(1, -1)])
    assert chamber_orbits(two, FacePairing(pi, ()), [(1, -1)], IsometryGroup(u, []), 3).classes == [[0], [1]]
    glued = FacePairing(pi, (PairingEntry((2, -1), SWAP_T, ("swap",)),))
    res = chamber_orbits(two, glued, [(1, -1)], swap_group, 3)
    assert res.classes == [[0, 1]] and res.status == CERTIFIED
    # witnessed relations come from translates overlapping a chamber
    for i, j, el, kind in res.witnesses:
        assert check_isometry(u, el.matrix)


def test_pairing_validation(u, swap_group):
    pi = cone_from_generators(u, [(2, 1), (1, 2)])
    two = subdivide(pi, [(1, -1)])
    not_iso = FacePairing(pi, (PairingEntry((2, -1), ((1, 0), (0, -1))),))
    with pytest.raises(PairingError):
        chamber_orbits(two, not_iso, [(1, -1)], swap_group, 2)
    not_facet = FacePairing(pi, (PairingEntry((1, -1), SWAP_T),))
    with pytest.raises(PairingError):
        chamber_orbits(two, not_facet, [(1, -1)], swap_group, 2)
