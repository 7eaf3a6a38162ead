"""Enumeration of the lattice walls of bounded negative square that meet a
rational polyhedral cone inside the positive cone.

The cone is cut into the 2-dimensional subcones spanned by pairs of its
minimal generators.  Each pair spans a rational plane ``P``; a lattice vector
``v`` is split as ``v = (plane part) + xi`` with ``xi`` orthogonal to ``P``,
the plane part is pinned down by the two integers ``((v, u1), (v, u2))`` and
``xi`` ranges over a coset of the negative definite lattice ``P``-perp, which
is enumerated as an ellipsoid.  Every candidate is finished off by an exact
geometric test, so the coefficient bounds only need to be generous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import _exact as ex
from .cones import RationalCone, cone_from_generators, check_in_closed_positive_cone, wall_separates
from .errors import PreconditionError
from .lattice import (
    ConePosition,
    Lattice,
    cone_position,
    orthogonal_complement_basis,
    primitive,
    shifted_short_vectors,
    short_vectors,
)


@dataclass(frozen=True, order=True)
class Wall:
    v: tuple
    square: int = field(compare=False)
    source: tuple = field(default=(), compare=False)


@dataclass(frozen=True)
class WallQuery:
    lattice: Lattice
    cone: RationalCone
    N: int

    def __post_init__(self):
        if int(self.N) < 1:
            raise PreconditionError(f"N must be a positive integer, got {self.N}")
        check_in_closed_positive_cone(self.cone)


def _make_wall(L: Lattice, v, source=()) -> Wall:
    p = primitive(L, v)
    return Wall(p, L.square(p), tuple(source))


def _collect(L: Lattice, vectors: Iterable, source=()) -> dict:
    out: dict = {}
    for v in vectors:
        if any(v):
            w = _make_wall(L, v, source)
            out.setdefault(w.v, w)
    return out


class _PlaneCosets:
    """Lattice vectors with prescribed pairings against a rational plane basis.

    For a basis ``u1, u2`` of a non-degenerate plane ``P``, the set
    ``{v : (v, u1) = p, (v, u2) = q}`` is ``v0 + (L cap P-perp)``.  Its
    members of square ``> -N`` are the points of an ellipsoid in that coset.
    """

    def __init__(self, L: Lattice, u1, u2):
        self.L = L
        self.u1, self.u2 = tuple(u1), tuple(u2)
        self.system = ex.IntegerSystem([L.covector(u1), L.covector(u2)])
        comp = orthogonal_complement_basis(L, [u1, u2])
        self.K = comp.basis
        self.GK = comp.gram
        self.GK_inv = ex.inverse(self.GK) if self.K else ()
        a, b, c = L.square(u1), L.pair(u1, u2), L.square(u2)
        self.G2 = ((a, b), (b, c))
        self.G2_inv = ex.inverse(self.G2)

    def plane_square(self, p: int, q: int) -> Fraction:
        """Square of the ``P``-component of any ``v`` with these pairings."""
        a, b = ex.mat_vec(self.G2_inv, (p, q))
        return a * p + b * q

    def vectors(self, p: int, q: int, N) -> list[tuple]:
        v0 = self.system.solve((p, q))
        if v0 is None:
            return []
        L = self.L
        if not self.K:
            return [v0] if L.square(v0) > -N else []
        budget = N + self.plane_square(p, q)
        if budget <= 0:
            return []
        rhs = [L.pair(k, v0) for k in self.K]
        c = ex.mat_vec(self.GK_inv, rhs)
        ks = shifted_short_vectors(self.GK, [-a for a in c], budget, strict=True)
        n = L.rank
        out = []
        for k in ks:
            v = tuple(v0[i] + sum(k[j] * self.K[j][i] for j in range(len(k))) for i in range(n))
            out.append(v)
        return out


def _check_positive_pair(L: Lattice, x1, x2):
    if ex.rank([x1, x2]) < 2:
        raise PreconditionError("x1 and x2 are linearly dependent")


def segment_bounds(L: Lattice, x1, x2, N):
    """Exact data bounding the plane coefficients on the segment ``[x1, x2]``.

    Returns ``(lam_lo, lam_hi, b_sq_bound)``: the range of
    ``lam(s) = (x2, s x1 + (1-s) x2) / (x1, s x1 + (1-s) x2)`` over
    ``[0, 1]`` and the strict bound ``b^2 < N / m`` where ``m`` is the minimum
    of ``-((lam x1 - x2)^2)`` on that range.  ``lam`` is a Mobius function with
    positive denominator, hence monotone; ``t -> ((t x1 - x2)^2)`` is convex, so
    its maximum over the interval sits at an endpoint.
    """
    s11, s12, s22 = L.square(x1), L.pair(x1, x2), L.square(x2)
    lam0 = Fraction(s22, s12)
    lam1 = Fraction(s12, s11)

    def qf(t):
        return t * t * s11 - 2 * t * s12 + s22

    m = min(-qf(lam0), -qf(lam1))
    if m <= 0:
        raise PreconditionError("segment leaves the positive cone")
    return min(lam0, lam1), max(lam0, lam1), Fraction(N) / m


def walls_on_segment(L: Lattice, x1, x2, N: int) -> list[Wall]:
    """Walls ``v`` with ``(v, v) > -N`` and ``(v, s x1 + (1-s) x2) = 0`` for some
    ``s`` in ``[0, 1]``.  Both endpoints must be positive classes."""
    x1 = tuple(int(a) for a in x1)
    x2 = tuple(int(a) for a in x2)
    for x in (x1, x2):
        if cone_position(L, x) is not ConePosition.INTERIOR_POSITIVE:
            raise PreconditionError(f"{list(x)} is not in the open positive cone")
    _check_positive_pair(L, x1, x2)
    return sorted(_segment_candidates(L, x1, x2, N, ()).values())


def _segment_candidates(L: Lattice, x1, x2, N, source) -> dict:
    s11, s12, s22 = L.square(x1), L.pair(x1, x2), L.square(x2)
    disc = s12 * s12 - s11 * s22
    if disc <= 0:
        raise PreconditionError("plane spanned by x1, x2 is not hyperbolic")
    lam_lo, lam_hi, b_sq = segment_bounds(L, x1, x2, N)
    beta = ex.ceil_sqrt(b_sq)

    # (p, q) = ((v, x1), (v, x2)) is linear in the plane coefficients (a, b)
    corners = [(Fraction(0), Fraction(0))]
    for b in (beta, -beta):
        for lam in (lam_lo, lam_hi):
            corners.append((-b * lam, Fraction(b)))
    ps = [a * s11 + b * s12 for a, b in corners]
    qs = [a * s12 + b * s22 for a, b in corners]
    p_lo, p_hi = _floor(min(ps)), _ceil(max(ps))
    q_lo, q_hi = _floor(min(qs)), _ceil(max(qs))

    plane = _PlaneCosets(L, x1, x2)
    # integer forms of  b^2 < N/m  and  (plane part)^2 > -N, with
    # b = (s11 q - s12 p) / det and det = -disc
    bn, bd = b_sq.numerator, b_sq.denominator
    det_sq = disc * disc
    found = []
    for p in range(p_lo, p_hi + 1):
        if p > 0:
            q_range = range(q_lo, min(q_hi, 0) + 1)
        elif p < 0:
            q_range = range(max(q_lo, 0), q_hi + 1)
        else:
            q_range = range(q_lo, q_hi + 1)
        for q in q_range:
            b_num = s11 * q - s12 * p
            if b_num * b_num * bd >= bn * det_sq:
                continue
            if s22 * p * p - 2 * s12 * p * q + s11 * q * q >= N * disc:
                continue
            for v in plane.vectors(p, q, N):
                if L.pair(v, x1) * L.pair(v, x2) <= 0 and L.square(v) > -N:
                    found.append(v)
    return _collect(L, found, source)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def second_isotropic(L: Lattice, x, y) -> tuple:
    """The primitive isotropic vector ``z`` of ``span(x, y)`` with ``(x, z) > 0``.

    ``z`` is a positive multiple of ``y - (y, y) / (2 (x, y)) x``.
    """
    y = tuple(ex.frac(a) for a in y)
    t = L.square(y) / (2 * L.pair(x, y))
    z = ex.primitive_int([yi - t * xi for yi, xi in zip(y, x)])
    return tuple(int(a) for a in z)


def walls_on_isotropic_plane(L: Lattice, x, y, N: int) -> list[Wall]:
    """Walls ``v`` with ``(v, v) > -N`` meeting ``P cap C+`` for the plane
    ``P = span(x, y)``, where ``x`` is isotropic with ``(x, h) > 0`` and ``y``
    is a rational positive class."""
    return sorted(_isotropic_candidates(L, x, y, N, ()).values())


def _isotropic_candidates(L: Lattice, x, y, N, source) -> dict:
    x = tuple(int(a) for a in ex.primitive_int(x)) if any(x) else tuple(x)
    if not any(x) or L.square(x) != 0:
        raise PreconditionError(f"{list(x)} is not a nonzero isotropic vector")
    if L.pair(x, L.h) <= 0:
        raise PreconditionError("isotropic vector must satisfy (x, h) > 0")
    y = tuple(ex.frac(a) for a in y)
    if cone_position(L, y) is not ConePosition.INTERIOR_POSITIVE:
        raise PreconditionError(f"{[str(a) for a in y]} is not in the open positive cone")
    if ex.rank([x, y]) < 2:
        raise PreconditionError("x and y are linearly dependent")
    z = second_isotropic(L, x, y)
    xz = L.pair(x, z)
    assert L.square(z) == 0 and xz > 0

    # (v, v) = 2 a b (x, z) + (xi, xi) with a = (v, z)/(x, z), b = (v, x)/(x, z);
    # v-perp meets the open cone between x and z iff a b < 0 or a = b = 0.
    plane = _PlaneCosets(L, z, x)
    limit = N * xz  # 2 |A B| < N (x, z)
    pairs = [(0, 0)]
    A = 1
    while 2 * A < limit:
        B = 1
        while 2 * A * B < limit:
            pairs.extend([(A, -B), (-A, B)])
            B += 1
        A += 1
    base = cone_from_generators(L, [x, z])
    found = []
    for A, B in pairs:
        for v in plane.vectors(A, B, N):
            if any(v) and L.square(v) > -N and wall_separates(base, v):
                found.append(v)
    return _collect(L, found, source)


def walls_meeting_cone(q: WallQuery) -> list[Wall]:
    """All primitive ``v`` with ``(v, v) > -N`` whose hyperplane meets the cone
    in a point of the open positive cone, sorted and sign-normalised."""
    L, C, N = q.lattice, q.cone, int(q.N)
    if C.is_zero:
        return []
    gens = list(C.generators)
    positions = check_in_closed_positive_cone(C)
    found: dict = {}
    if len(gens) == 1:
        x1 = gens[0]
        if positions[0] is not ConePosition.INTERIOR_POSITIVE:
            return []
        comp = orthogonal_complement_basis(L, [x1])
        for c in short_vectors(comp.gram, N):
            if not any(c):
                continue
            v = tuple(sum(c[j] * comp.basis[j][i] for j in range(len(c))) for i in range(L.rank))
            if L.square(v) > -N:
                w = _make_wall(L, v, (0,))
                found.setdefault(w.v, w)
    else:
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                xi, xj = gens[i], gens[j]
                s = tuple(a + b for a, b in zip(xi, xj))
                if L.square(s) <= 0:
                    raise AssertionError("sum of independent closed-cone classes must be positive")
                if positions[i] is ConePosition.BOUNDARY_POSITIVE:
                    cand = _isotropic_candidates(L, xi, s, N, (i, j))
                elif positions[j] is ConePosition.BOUNDARY_POSITIVE:
                    cand = _isotropic_candidates(L, xj, s, N, (i, j))
                else:
                    cand = _segment_candidates(L, xi, xj, N, (i, j))
                for key, w in cand.items():
                    found.setdefault(key, w)
    return sorted(w for w in found.values() if wall_separates(C, w.v))


# --- oracle -----------------------------------------------------------------

def _xi_extent(L: Lattice, S, N) -> list[int]:
    """Integer bounds on coordinates of ``xi`` in ``S``-perp with ``-(xi, xi) < N``."""
    comp = orthogonal_complement_basis(L, S)
    n = L.rank
    if not comp.basis:
        return [0] * n
    Minv = ex.inverse([[-a for a in row] for row in comp.gram])
    K = comp.basis
    out = []
    for i in range(n):
        # max of (K c)_i subject to c^T M c <= N is sqrt(N * (K M^-1 K^T)_ii)
        val = sum(K[a][i] * Minv[a][b] * K[b][i] for a in range(len(K)) for b in range(len(K)))
        out.append(ex.ceil_sqrt(Fraction(N) * val))
    return out


def derived_box(q: WallQuery) -> int:
    """A coordinate box radius containing every wall of the query.

    Built from the coefficient bounds of the two plane cases: on a segment
    pair ``b^2 < N/m`` and ``|a| <= |b| max|lam|``; on an isotropic pair with
    primitive ``x, z`` both ``|a|, |b| < N/2``; in every case
    ``-(xi, xi) < N``.
    """
    L, C, N = q.lattice, q.cone, int(q.N)
    gens = list(C.generators)
    if not gens:
        return 0
    positions = check_in_closed_positive_cone(C)
    n = L.rank
    box = 0
    if len(gens) == 1:
        if positions[0] is ConePosition.INTERIOR_POSITIVE:
            box = max(_xi_extent(L, [gens[0]], N))
        return box
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            xi, xj = gens[i], gens[j]
            ext = _xi_extent(L, [xi, xj], N)
            if positions[i] is ConePosition.BOUNDARY_POSITIVE or positions[j] is ConePosition.BOUNDARY_POSITIVE:
                x = xi if positions[i] is ConePosition.BOUNDARY_POSITIVE else xj
                z = second_isotropic(L, x, tuple(a + b for a, b in zip(xi, xj)))
                for k in range(n):
                    plane = Fraction(N, 2) * (abs(x[k]) + abs(z[k]))
                    box = max(box, _ceil(plane) + ext[k])
            else:
                lam_lo, lam_hi, b_sq = segment_bounds(L, xi, xj, N)
                lam = max(abs(lam_lo), abs(lam_hi))
                for k in range(n):
                    coef = lam * abs(xi[k]) + abs(xj[k])
                    box = max(box, ex.ceil_sqrt(b_sq * coef * coef) + ext[k])
    return box


def brute_force_walls(q: WallQuery, box: int) -> list[Wall]:
    """Scan every ``v`` in ``[-box, box]^n`` and keep the walls of the query.

    Complete only when ``box`` dominates the true coordinates, e.g.
    ``box = derived_box(q)``.  The scan is vectorised with int64 arithmetic
    (exact at these magnitudes); survivors go through :func:`wall_separates`.
    """
    L, C, N = q.lattice, q.cone, int(q.N)
    box = int(box)
    if box <= 0 or C.is_zero:
        return []
    n = L.rank
    G = np.array(L.gram, dtype=np.int64)
    gens = np.array(C.generators, dtype=np.int64)
    pair_mat = G @ gens.T
    rng = np.arange(-box, box + 1, dtype=np.int64)
    rest = np.array(list(product(rng, repeat=n - 1)), dtype=np.int64).reshape(-1, n - 1)
    found: dict = {}
    for first in rng:
        V = np.hstack([np.full((len(rest), 1), first, dtype=np.int64), rest])
        sq = np.einsum("ij,jk,ik->i", V, G, V)
        P = V @ pair_mat
        keep = (sq > -N) & ~np.all(P > 0, axis=1) & ~np.all(P < 0, axis=1)
        for row in V[keep]:
            v = tuple(int(a) for a in row)
            if any(v) and wall_separates(C, v):
                w = _make_wall(L, v)
                found.setdefault(w.v, w)
    return sorted(found.values())
