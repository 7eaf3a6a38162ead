from fractions import Fraction

import pytest

from conewalls.errors import (
    BadReferenceError,
    DegenerateError,
    NotNegativeDefiniteError,
    SignatureError,
    ZeroVectorError,
)
from conewalls.lattice import (
    ConePosition,
    cone_position,
    make_lattice,
    orthogonal_complement_basis,
    pair,
    primitive,
    shifted_short_vectors,
    short_vectors,
)

U = [[0, 1], [1, 0]]
U_M2 = [[0, 1, 0], [1, 0, 0], [0, 0, -2]]


@pytest.fixture
def u():
    return make_lattice(U, [1, 1])


@pytest.fixture
def u_m2():
    return make_lattice(U_M2, [1, 1, 0])


def test_make_lattice_accepts_hyperbolic_forms(u, u_m2):
    assert u.rank == 2
    assert u_m2.rank == 3


@pytest.mark.parametrize(
    "gram, h, err",
    [
        ([[2, 0], [0, 2]], [1, 0], SignatureError),
        ([[-2, 0], [0, -2]], [1, 0], SignatureError),
        ([[1, 1], [1, 1]], [1, 0], DegenerateError),
        ([[0, 1], [1, 0]], [1, -1], BadReferenceError),
        ([[0, 1], [1, 0]], [1, 0], BadReferenceError),
        ([[0, 1], [2, 0]], [1, 1], SignatureError),
        ([[1]], [1], SignatureError),
    ],
)
def test_make_lattice_rejects(gram, h, err):
    with pytest.raises(err):
        make_lattice(gram, h)


def test_error_codes_are_machine_readable():
    assert SignatureError.code == "signature"
    assert DegenerateError.code == "degenerate"


def test_pair(u, u_m2):
    assert pair(u, (1, 0), (0, 1)) == 1
    assert pair(u, (2, 1), (2, 1)) == 4
    assert pair(u_m2, (0, 0, 1), (0, 0, 1)) == -2
    assert pair(u, (Fraction(1, 2), 0), (0, 3)) == Fraction(3, 2)
    with pytest.raises(ValueError):
        pair(u, (1, 0, 0), (1, 0))


def test_cone_position(u):
    assert cone_position(u, (2, 1)) is ConePosition.INTERIOR_POSITIVE
    assert cone_position(u, (1, 0)) is ConePosition.BOUNDARY_POSITIVE
    assert cone_position(u, (1, -1)) is ConePosition.OUTSIDE
    assert cone_position(u, (0, 0)) is ConePosition.ZERO
    assert cone_position(u, (-2, -1)) is ConePosition.OUTSIDE


def test_orthogonal_complement(u, u_m2):
    c = orthogonal_complement_basis(u, [(1, 1)])
    assert c.basis == ((1, -1),)
    assert c.gram == ((-2,),)
    c = orthogonal_complement_basis(u_m2, [(1, 0, 0), (0, 1, 0)])
    assert c.basis == ((0, 0, 1),)
    assert c.gram == ((-2,),)
    assert orthogonal_complement_basis(u, [(1, 0), (0, 1)]).basis == ()


def test_complement_is_saturated():
    # (2, 0, 0) spans the same line as (1, 0, 0); the complement must not depend on it
    L = make_lattice([[2, 1, 0], [1, -2, 0], [0, 0, -4]], [1, 0, 0])
    a = orthogonal_complement_basis(L, [(2, 0, 0)])
    b = orthogonal_complement_basis(L, [(1, 0, 0)])
    assert a == b
    for w in a.basis:
        assert L.pair(w, (1, 0, 0)) == 0


def test_short_vectors():
    assert short_vectors([[-2]], 2) == [(0,), (1,)]
    assert short_vectors([[-2]], 1) == [(0,)]
    assert short_vectors([[-2, 1], [1, -2]], 2) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    with pytest.raises(NotNegativeDefiniteError):
        short_vectors([[2]], 1)
    with pytest.raises(NotNegativeDefiniteError):
        short_vectors([[0, 1], [1, 0]], 1)


def test_short_vectors_match_bruteforce():
    import itertools

    G = [[-4, 1, 0], [1, -2, 1], [0, 1, -6]]
    for B in (0, 3, Fraction(11, 2), 9):
        got = set(short_vectors(G, B))
        want = set()
        for v in itertools.product(range(-5, 6), repeat=3):
            norm = -sum(G[i][j] * v[i] * v[j] for i in range(3) for j in range(3))
            if norm <= B:
                first = next((a for a in v if a), 1)
                want.add(v if first > 0 else tuple(-a for a in v))
        assert got == want


def test_shifted_short_vectors_strict():
    pts = shifted_short_vectors([[-2]], [Fraction(1, 2)], 2)
    # 2 (k - 1/2)^2 < 2  <=>  k in {0, 1}
    assert sorted(pts) == [(0,), (1,)]
    assert shifted_short_vectors([[-2]], [0], 0) == []
    assert shifted_short_vectors([[-2]], [0], 0, strict=False) == [(0,)]


def test_primitive(u):
    assert primitive(u, (2, -2)) == (1, -1)
    assert primitive(u, (4, 2)) == (2, 1)
    assert primitive(u, (0, -3)) == (0, 1)
    assert primitive(u, (Fraction(-1, 2), Fraction(-1, 4))) == (2, 1)
    with pytest.raises(ZeroVectorError):
        primitive(u, (0, 0))
