import pytest

from conewalls.chambers import BOUNDARY, adjacency, locate, subdivide
from conewalls.cones import cone_from_generators, same_cone
from conewalls.errors import NotInConeError
from conewalls.lattice import make_lattice


@pytest.fixture
def u():
    return make_lattice([[0, 1], [1, 0]], [1, 1])


@pytest.fixture
def split(u):
    return subdivide(cone_from_generators(u, [(2, 1), (1, 2)]), [(1, -1)])


def test_two_chamber_split(u, split):
    cones = [ch.cone for ch in split]
    assert len(cones) == 2
    assert any(same_cone(c, cone_from_generators(u, [(2, 1), (1, 1)])) for c in cones)
    assert any(same_cone(c, cone_from_generators(u, [(1, 1), (1, 2)])) for c in cones)
    assert [ch.index for ch in split] == [0, 1]
    for ch in split:
        assert ch.walls_on_boundary == ((1, -1),)
        assert dict(ch.sign_vector)[(1, -1)] in (-1, 1)


def test_no_walls_and_ray(u):
    pi = cone_from_generators(u, [(2, 1), (1, 2)])
    (only,) = subdivide(pi, [])
    assert only.cone == pi
    ray = cone_from_generators(u, [(1, 1)])
    (r,) = subdivide(ray, [(1, -1)])
    assert r.cone == ray and dict(r.sign_vector)[(1, -1)] == 0


def test_locate(u, split):
    idx = locate((3, 2), split)
    assert same_cone(split[idx].cone, cone_from_generators(u, [(2, 1), (1, 1)]))
    assert locate((1, 1), split) == BOUNDARY
    assert locate((2, 1), split) == BOUNDARY
    with pytest.raises(NotInConeError):
        locate((1, -1), split)


def test_adjacency(u, split):
    G = adjacency(split)
    assert list(G.edges(data="wall")) == [(0, 1, (1, -1))]
    single = subdivide(cone_from_generators(u, [(2, 1), (1, 2)]), [])
    assert adjacency(single).number_of_edges() == 0


def test_three_chamber_path(u):
    pi = cone_from_generators(u, [(3, 1), (1, 3)])
    chambers = subdivide(pi, [(1, -1), (2, -1)])
    assert len(chambers) == 3
    G = adjacency(chambers)
    assert sorted(d for _, d in G.degree()) == [1, 1, 2]
    assert {w for _, _, w in G.edges(data="wall")} == {(1, -1), (2, -1)}


def test_irrelevant_wall_does_not_split(u):
    pi = cone_from_generators(u, [(2, 1), (1, 2)])
    assert len(subdivide(pi, [(0, 1), (1, -1), (2, -2)])) == 2
