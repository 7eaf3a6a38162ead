from fractions import Fraction

import pytest

from conewalls import _exact as ex
from conewalls.cones import cone_from_generators
from conewalls.errors import DegenerateError, MukaiVectorError, PreconditionError
from conewalls.mukai import (
    brute_force_sigma_walls,
    make_mukai_setup,
    oracle_box,
    project,
    scaled_bound,
    sigma_walls_meeting_cone,
    wall_bound,
)

U2 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]


@pytest.fixture
def ms():
    return make_mukai_setup(U2, (1, 1, 0, 0))


def _amb(ms, c):
    return tuple(sum(Fraction(c[j]) * ms.perp_basis[j][i] for j in range(len(c))) for i in range(len(ms.v)))


def _pair(G, x, y):
    return ex.dot(ex.mat_vec(G, x), y)


def test_setup(ms):
    assert ms.vv == 2
    assert ms.perp_basis == ((1, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert ms.perp.gram == ((-2, 0, 0), (0, 0, 1), (0, 1, 0))
    for b in ms.perp_basis:
        assert _pair(U2, b, ms.v) == 0


@pytest.mark.parametrize(
    "gram, v, err",
    [
        (U2, (1, 0, 0, 0), MukaiVectorError),  # (v, v) = 0
        (U2, (2, 2, 0, 0), MukaiVectorError),  # not primitive
        ([[1, 0], [0, -1]], (1, 0), MukaiVectorError),  # (v, v) = 1
        ([[1, 1], [1, 1]], (1, 0), DegenerateError),
    ],
)
def test_setup_rejects(gram, v, err):
    with pytest.raises(err):
        make_mukai_setup(gram, v)


def test_project(ms):
    assert project(ms, (0, 0, 1, 0)) == (0, 1, 0)
    assert project(ms, ms.v) == (0, 0, 0)
    x = (0, 1, 0, 0)
    lam = project(ms, x)
    # direct formula: x - ((v, x)/(v, v)) v = (-1/2, 1/2, 0, 0)
    assert _amb(ms, lam) == (Fraction(-1, 2), Fraction(1, 2), 0, 0)
    assert _pair(U2, _amb(ms, lam), ms.v) == 0
    # idempotent on the image
    y = (3, -2, 5, 1)
    p1 = project(ms, y)
    assert project(ms, _amb(ms, p1)) == p1


def test_wall_bound():
    assert wall_bound(make_mukai_setup(U2, (1, 1, 0, 0))) == Fraction(-5, 2)
    assert wall_bound(make_mukai_setup(U2, (1, 3, 0, 0))) == Fraction(-7, 2)
    assert scaled_bound(make_mukai_setup(U2, (1, 1, 0, 0))) == 11


def test_sigma_walls_and_bound(ms):
    C = cone_from_generators(ms.perp, [(0, 1, 1), (1, 3, 1)])
    walls = sigma_walls_meeting_cone(ms, C)
    assert walls
    for w in walls:
        assert w.lam_square >= wall_bound(ms)
        assert 0 <= w.k <= ms.vv // 2
        x = w.lift
        assert _pair(U2, x, x) >= -2
        assert _pair(U2, x, ms.v) == w.k
        p = project(ms, x)
        assert p == w.lam or p == tuple(-a for a in w.lam)
    # the k = 0 walls are the integral (-2)-classes of v-perp
    k0 = [w for w in walls if w.k == 0]
    assert k0 and all(w.lam_square == -2 and all(Fraction(a).denominator == 1 for a in w.lam) for w in k0)


def test_oracle_rank4(ms):
    for gens in ([(0, 1, 0), (0, 0, 1)], [(1, 2, 2), (0, 3, 1)], [(0, 2, 1)]):
        C = cone_from_generators(ms.perp, gens)
        got = [w.lam for w in sigma_walls_meeting_cone(ms, C)]
        assert got == brute_force_sigma_walls(ms, C, oracle_box(ms, C))


def test_ray_missing_every_wall(ms):
    # first ray (in a small search) orthogonal to no admissible lam
    C = cone_from_generators(ms.perp, [(1, 3, 5)])
    assert sigma_walls_meeting_cone(ms, C) == []
    assert brute_force_sigma_walls(ms, C, oracle_box(ms, C)) == []


def test_isometry_invariance():
    # exchange the two hyperbolic planes: v -> (0, 0, 1, 1)
    phi = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    a = make_mukai_setup(U2, (1, 1, 0, 0))
    b = make_mukai_setup(U2, tuple(ex.mat_vec(phi, (1, 1, 0, 0))))
    gens_a = [(0, 1, 1), (1, 3, 1)]
    amb_gens = [_amb(a, g) for g in gens_a]
    moved = [ex.mat_vec(phi, g) for g in amb_gens]
    gens_b = [tuple(int(t) for t in ex.solve(ex.transpose(b.perp_basis), m)) for m in moved]
    hb = ex.solve(ex.transpose(b.perp_basis), ex.mat_vec(phi, _amb(a, a.perp.h)))
    b = make_mukai_setup(U2, b.v, tuple(int(t) for t in hb))
    wa = sigma_walls_meeting_cone(a, cone_from_generators(a.perp, gens_a))
    wb = sigma_walls_meeting_cone(b, cone_from_generators(b.perp, gens_b))
    # compare as lines: the sign convention is not transported by phi
    image = sorted(_unsigned(ex.mat_vec(phi, _amb(a, w.lam))) for w in wa)
    assert image == sorted(_unsigned(_amb(b, w.lam)) for w in wb)


def _unsigned(x):
    x = tuple(x)
    return x if next(a for a in x if a) > 0 else tuple(-a for a in x)


def test_precondition(ms):
    with pytest.raises(PreconditionError):
        sigma_walls_meeting_cone(ms, cone_from_generators(ms.perp, [(1, 0, 0)]))
