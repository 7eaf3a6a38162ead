"""Walls from a Mukai vector.

Given an even lattice ``Lt`` and a primitive ``v`` with ``(v, v) >= 2``, set

    Sigma~ = {x in Lt : (x, x) >= -2 and 0 <= (v, x) <= (v, v)/2}
    Sigma  = p(Sigma~),  p(x) = x - ((v, x)/(v, v)) v.

Every ``lam`` in ``Sigma`` lies in ``v``-perp and satisfies
``(lam, lam) >= -2 - (v, v)/4``.  Since ``(v, v) lam = (v, v) x - (v, x) v``
is integral, the walls are found by ordinary integral wall enumeration in
``v``-perp with the bound scaled by ``(v, v)^2``, followed by an exact lifting
test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Sequence

import numpy as np

from . import _exact as ex
from .cones import RationalCone, check_in_closed_positive_cone, wall_separates
from .errors import DegenerateError, MukaiVectorError
from .lattice import Lattice, complement_in_gram, make_lattice, primitive
from .walls import WallQuery, derived_box, walls_meeting_cone


@dataclass(frozen=True)
class MukaiSetup:
    ambient_gram: tuple
    v: tuple
    perp_basis: tuple  # ambient coordinates of a basis of v-perp
    perp: Lattice  # v-perp with its induced form and a positive class

    @property
    def vv(self) -> int:
        return _pair(self.ambient_gram, self.v, self.v)


def _pair(G, x, y):
    return ex.dot(ex.mat_vec(G, x), y)


def _find_positive(gram) -> tuple:
    # smallest box first; deterministic order
    n = len(gram)
    for r in range(1, 4):
        for c in product(range(-r, r + 1), repeat=n):
            if _pair(gram, c, c) > 0:
                return c if next(a for a in c if a) > 0 else tuple(-a for a in c)
    raise DegenerateError("no positive vector found in v-perp")


def make_mukai_setup(ambient_gram: Sequence[Sequence[int]], v: Sequence[int], h: Sequence[int] | None = None) -> MukaiSetup:
    """Validate ``(ambient, v)`` and build ``v``-perp.

    ``h`` (coordinates in the ``v``-perp basis) picks the positive cone of
    ``v``-perp; by default the first positive vector of a small search.
    """
    G = tuple(tuple(int(a) for a in row) for row in ambient_gram)
    n = len(G)
    if n < 2 or any(len(r) != n for r in G) or any(G[i][j] != G[j][i] for i in range(n) for j in range(n)):
        raise DegenerateError("ambient gram must be a symmetric square matrix")
    if ex.det(G) == 0:
        raise DegenerateError("ambient gram is singular")
    v = tuple(int(a) for a in v)
    if len(v) != n:
        raise MukaiVectorError(f"v has length {len(v)}, expected {n}")
    vv = _pair(G, v, v)
    if vv < 2 or vv % 2:
        raise MukaiVectorError(f"(v, v) = {vv}; need an even value >= 2")
    if ex.content(v) != 1:
        raise MukaiVectorError("v is not primitive")
    comp = complement_in_gram(G, [v])
    pg = comp.gram
    h = tuple(int(a) for a in h) if h is not None else _find_positive(pg)
    perp = make_lattice(pg, h)
    return MukaiSetup(G, v, comp.basis, perp)


def wall_bound(ms: MukaiSetup) -> Fraction:
    return Fraction(-2) - Fraction(ms.vv, 4)


def _to_perp(ms: MukaiSetup, y: Sequence) -> tuple:
    B = ex.transpose(ms.perp_basis)
    c = ex.solve(B, y)
    if c is None:
        raise AssertionError("vector is not in v-perp")
    return tuple(ex.normalize_number(a) for a in c)


def _from_perp(ms: MukaiSetup, c: Sequence) -> tuple:
    n = len(ms.v)
    return tuple(sum(ex.frac(c[j]) * ms.perp_basis[j][i] for j in range(len(c))) for i in range(n))


def project(ms: MukaiSetup, x: Sequence) -> tuple:
    """``x - ((v, x)/(v, v)) v`` in ``v``-perp coordinates."""
    t = Fraction(_pair(ms.ambient_gram, ms.v, x), ms.vv)
    y = tuple(ex.frac(a) - t * b for a, b in zip(x, ms.v))
    return _to_perp(ms, y)


@dataclass(frozen=True, order=True)
class SigmaWall:
    lam: tuple  # v-perp coordinates, sign-normalised
    lam_square: Fraction
    wall: tuple  # primitive integral normal in v-perp coordinates
    lift: tuple  # some x in Sigma~ with p(x) = +-lam
    k: int  # (v, x)


def _lift(ms: MukaiSetup, lam: tuple, lam_sq: Fraction):
    vv = ms.vv
    base = _from_perp(ms, lam)
    for k in range(vv // 2 + 1):
        if lam_sq + Fraction(k * k, vv) < -2:
            continue
        x = tuple(a + Fraction(k, vv) * b for a, b in zip(base, ms.v))
        if all(a.denominator == 1 for a in x):
            return tuple(int(a) for a in x), k
    return None


def _sign_normalise(L: Lattice, lam: tuple) -> tuple:
    s = L.pair(lam, L.h)
    if s < 0 or (s == 0 and next(a for a in lam if a != 0) < 0):
        return tuple(-a for a in lam)
    return lam


def _candidate(ms: MukaiSetup, mu: tuple):
    """SigmaWall for ``lam = mu / (v, v)`` (either orientation) or None."""
    L = ms.perp
    vv = ms.vv
    lam = tuple(ex.normalize_number(Fraction(a, vv)) for a in mu)
    lam_sq = ex.frac(L.square(lam))
    if lam_sq < wall_bound(ms):
        return None
    norm = _sign_normalise(L, lam)
    for cand in (norm, tuple(-a for a in norm)):
        lifted = _lift(ms, cand, lam_sq)
        if lifted is not None:
            return SigmaWall(norm, lam_sq, primitive(L, mu), lifted[0], lifted[1])
    return None


def scaled_bound(ms: MukaiSetup) -> int:
    """``N'`` with ``(mu, mu) > -N'`` for every ``mu = (v, v) lam``."""
    vv = ms.vv
    return -((-vv * vv * (8 + vv)) // 4) + 1


def sigma_walls_meeting_cone(ms: MukaiSetup, cone: RationalCone) -> list[SigmaWall]:
    """All ``lam`` in ``Sigma`` (up to sign) whose hyperplane meets ``cone``
    inside the positive cone of ``v``-perp.  ``cone`` lives in the
    ``v``-perp coordinates of ``ms.perp``."""
    L = ms.perp
    check_in_closed_positive_cone(cone)
    Np = scaled_bound(ms)
    out: dict = {}
    for w in walls_meeting_cone(WallQuery(L, cone, Np)):
        u = w.v
        t_max = isqrt((Np - 1) // -w.square) if w.square < 0 else 0
        for t in range(1, t_max + 1):
            sw = _candidate(ms, tuple(t * a for a in u))
            if sw is not None:
                out.setdefault(sw.lam, sw)
    return sorted(out.values())


def oracle_box(ms: MukaiSetup, cone: RationalCone) -> int:
    """Ambient coordinate radius covering every lift of every output wall."""
    L = ms.perp
    box = derived_box(WallQuery(L, cone, scaled_bound(ms)))
    n = len(ms.v)
    best = 0
    for i in range(n):
        s = sum(abs(b[i]) for b in ms.perp_basis) * Fraction(box, ms.vv) + Fraction(abs(ms.v[i]), 2)
        best = max(best, -((-s.numerator) // s.denominator))
    return best


def brute_force_sigma_walls(ms: MukaiSetup, cone: RationalCone, box: int) -> list[tuple]:
    """Sign-normalised ``p(x)`` for ``x`` in Sigma~ within ``[-box, box]^n``
    whose hyperplane meets ``cone`` in the positive cone."""
    G = np.array(ms.ambient_gram, dtype=np.int64)
    n = len(G)
    vv = ms.vv
    rng = np.arange(-box, box + 1, dtype=np.int64)
    X = np.array(list(product(rng, repeat=n)), dtype=np.int64)
    sq = np.einsum("ij,jk,ik->i", X, G, X)
    vx = X @ (G @ np.array(ms.v, dtype=np.int64))
    keep = (sq >= -2) & (vx >= 0) & (2 * vx <= vv)
    L = ms.perp
    found = set()
    for row in X[keep]:
        lam = project(ms, [int(a) for a in row])
        if not any(lam):
            continue
        mu = tuple(int(a * vv) for a in lam)
        if wall_separates(cone, mu):
            found.add(_sign_normalise(L, lam))
    return sorted(found)
