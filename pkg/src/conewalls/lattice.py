"""Hyperbolic lattices: the Gram pairing, the positive cone, complements and
short vectors of negative definite sublattices."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _exact as ex
from .errors import (
    BadReferenceError,
    DegenerateError,
    NotNegativeDefiniteError,
    SignatureError,
    ZeroVectorError,
)


class ConePosition(enum.Enum):
    INTERIOR_POSITIVE = "InteriorPositive"
    BOUNDARY_POSITIVE = "BoundaryPositive"
    ZERO = "Zero"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class Lattice:
    """An integral lattice of signature (1, n-1) with a chosen positive class.

    ``h`` selects the component ``C+`` of ``{x : (x, x) > 0}``.  Build with
    :func:`make_lattice`, which validates everything exactly.
    """

    gram: tuple
    h: tuple
    _gram_inv: tuple = field(repr=False, compare=False, default=())

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, x: Sequence, y: Sequence):
        G = self.gram
        n = len(G)
        total = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = G[i]
                total += xi * sum(row[j] * y[j] for j in range(n))
        return total

    def square(self, x: Sequence):
        return self.pair(x, x)

    def covector(self, w: Sequence) -> tuple:
        """Coordinate functional ``G w`` so that ``(w, x) = (G w) . x``."""
        return ex.mat_vec(self.gram, w)

    def functional_from_covector(self, f: Sequence) -> tuple:
        """Lattice vector ``w`` (rational) with ``G w = f``."""
        return ex.mat_vec(self._gram_inv, f)

    def position(self, x: Sequence) -> ConePosition:
        return cone_position(self, x)


def make_lattice(gram: Sequence[Sequence[int]], h: Sequence[int]) -> Lattice:
    """Validate a Gram matrix of signature (1, n-1) and a positive class ``h``."""
    G = tuple(tuple(int(a) for a in row) for row in gram)
    n = len(G)
    if n < 2 or any(len(row) != n for row in G):
        raise SignatureError(f"gram must be a square matrix of size >= 2, got {n} rows")
    for i in range(n):
        for j in range(i + 1, n):
            if G[i][j] != G[j][i]:
                raise SignatureError(f"gram is not symmetric at ({i}, {j})")
    h = tuple(int(a) for a in h)
    if len(h) != n:
        raise BadReferenceError(f"h has length {len(h)}, expected {n}")
    if ex.det(G) == 0:
        raise DegenerateError("gram matrix is singular")
    pos, neg, _ = ex.inertia(G)
    if (pos, neg) != (1, n - 1):
        raise SignatureError(f"inertia is ({pos}, {neg}), expected (1, {n - 1})")
    inv = ex.inverse(G)
    L = Lattice(G, h, inv)
    if L.square(h) <= 0:
        raise BadReferenceError(f"(h, h) = {L.square(h)} is not positive")
    return L


def pair(L: Lattice, x: Sequence, y: Sequence):
    if len(x) != L.rank or len(y) != L.rank:
        raise ValueError("vector length does not match lattice rank")
    return L.pair(x, y)


def cone_position(L: Lattice, x: Sequence) -> ConePosition:
    if all(a == 0 for a in x):
        return ConePosition.ZERO
    sq = L.square(x)
    if sq < 0:
        return ConePosition.OUTSIDE
    # (x, h) != 0 here because h-perp is negative definite
    xh = L.pair(x, L.h)
    if xh <= 0:
        return ConePosition.OUTSIDE
    return ConePosition.INTERIOR_POSITIVE if sq > 0 else ConePosition.BOUNDARY_POSITIVE


def in_closed_positive_cone(L: Lattice, x: Sequence) -> bool:
    return cone_position(L, x) in (ConePosition.INTERIOR_POSITIVE, ConePosition.BOUNDARY_POSITIVE)


def primitive(L: Lattice, v: Sequence) -> tuple:
    """Primitive integral representative of the line through ``v``.

    Sign rule: ``(v, h) > 0`` when nonzero, otherwise first nonzero
    coordinate positive.
    """
    if all(a == 0 for a in v):
        raise ZeroVectorError("cannot normalise the zero vector")
    p = ex.primitive_int(v)
    s = L.pair(p, L.h)
    if s < 0 or (s == 0 and next(a for a in p if a != 0) < 0):
        p = tuple(-a for a in p)
    return p


@dataclass(frozen=True)
class Complement:
    """Saturated orthogonal complement: basis vectors and their Gram matrix."""

    basis: tuple
    gram: tuple

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def complement_in_gram(gram: Sequence[Sequence[int]], S: Sequence[Sequence[int]]) -> Complement:
    """Orthogonal complement of ``S`` inside the integral lattice with ``gram``."""
    n = len(gram)
    rows = [ex.mat_vec(gram, s) for s in S]
    rows = [tuple(int(a) for a in ex.primitive_int(r)) for r in rows if any(r)]
    if rows:
        basis = ex.integer_kernel(rows)
    else:
        basis = [tuple(r) for r in ex.identity(n)]
    B = tuple(_canonical_sign(tuple(int(a) for a in b)) for b in basis)
    induced = tuple(
        tuple(ex.dot(ex.mat_vec(gram, bi), bj) for bj in B) for bi in B
    )
    return Complement(B, induced)


def orthogonal_complement_basis(L: Lattice, S: Sequence[Sequence[int]]) -> Complement:
    """Basis of ``{w in L : (w, s) = 0 for all s in S}`` via an integer kernel.

    The basis comes from a unimodular column transformation, so the returned
    sublattice is saturated.
    """
    S = [ex.primitive_int(s) for s in S]
    return complement_in_gram(L.gram, S)


def _canonical_sign(v: tuple) -> tuple:
    for a in v:
        if a:
            return v if a > 0 else tuple(-b for b in v)
    return v


def short_vectors(neg_gram: Sequence[Sequence[int]], bound) -> list[tuple]:
    """Integer vectors ``xi`` with ``0 <= -(xi, xi) <= bound`` for a negative
    definite Gram matrix, one per sign pair, zero included.

    Sorted by norm, then reverse-lexicographically (last coordinate most
    significant); each vector has its first nonzero coordinate positive.
    """
    Q = [[-a for a in row] for row in neg_gram]
    if ex.fincke_pohst_form(Q) is None:
        raise NotNegativeDefiniteError("gram matrix is not negative definite")
    pts = ex.ellipsoid_points(Q, [0] * len(Q), ex.frac(bound))
    seen = set()
    out = []
    for p in pts:
        c = _canonical_sign(p)
        if c not in seen:
            seen.add(c)
            out.append(c)

    def norm(v):
        return sum(Q[i][j] * v[i] * v[j] for i in range(len(v)) for j in range(len(v)))

    out.sort(key=lambda v: (norm(v), v[::-1]))
    return out


def shifted_short_vectors(neg_gram: Sequence[Sequence[int]], center: Sequence, bound, strict: bool = True) -> list[tuple]:
    """Integer ``k`` with ``-(k - center)^T G (k - center)`` below ``bound``.

    Inhomogeneous companion of :func:`short_vectors`; no sign folding.
    """
    Q = [[-a for a in row] for row in neg_gram]
    bound = ex.frac(bound)
    if bound < 0 or (strict and bound == 0):
        return []
    pts = ex.ellipsoid_points(Q, center, bound)
    if not strict:
        return pts
    c = [ex.frac(a) for a in center]
    n = len(Q)
    keep = []
    for p in pts:
        u = [p[i] - c[i] for i in range(n)]
        val = sum(Q[i][j] * u[i] * u[j] for i in range(n) for j in range(n))
        if val < bound:
            keep.append(p)
    return keep
