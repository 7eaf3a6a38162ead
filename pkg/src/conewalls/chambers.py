"""Subdivision of a cone into closed chambers cut out by a finite wall set."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from . import _exact as ex
from .cones import RationalCone, Strictness, contains, intersect, intersect_halfspace, splits
from .errors import NotInConeError
from .lattice import primitive
from .walls import Wall


BOUNDARY = "Boundary"


@dataclass(frozen=True)
class Chamber:
    cone: RationalCone
    sign_vector: tuple  # ((wall, sign), ...) with sign in {-1, 0, +1}
    index: int
    walls_on_boundary: tuple = field(default=())

    @property
    def generators(self) -> tuple:
        return self.cone.generators


def _wall_vectors(L, walls) -> list[tuple]:
    vs = set()
    for w in walls:
        v = w.v if isinstance(w, Wall) else w
        if any(v):
            vs.add(primitive(L, v))
    return sorted(vs)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def subdivide(cone: RationalCone, walls: Sequence) -> list[Chamber]:
    """Split ``cone`` along every wall hyperplane that cuts a current piece.

    Walls are processed in sorted order; chambers are indexed by the
    lexicographic order of their generator lists.
    """
    L = cone.lattice
    vs = _wall_vectors(L, walls)
    pieces = [cone]
    for v in vs:
        nxt = []
        for P in pieces:
            if splits(P, v):
                nxt.append(intersect_halfspace(P, v, ">=0"))
                nxt.append(intersect_halfspace(P, v, "<=0"))
            else:
                nxt.append(P)
        pieces = nxt
    pieces.sort(key=lambda P: P.generators)
    chambers = []
    for idx, P in enumerate(pieces):
        p = P.interior_point()
        signs = tuple((v, _sign(L.pair(v, p))) for v in vs)
        on_boundary = []
        for v in vs:
            tight = [g for g in P.generators if L.pair(v, g) == 0]
            if tight and P.dim >= 1 and ex.rank(tight) == P.dim - 1 and not splits(P, v):
                on_boundary.append(v)
        chambers.append(Chamber(P, signs, idx, tuple(on_boundary)))
    return chambers


def locate(p: Sequence, chambers: Sequence[Chamber]):
    """Index of the chamber whose relative interior holds ``p``, or
    ``"Boundary"`` when ``p`` sits on a wall or chamber facet."""
    p = tuple(ex.frac(a) for a in p)
    hit = False
    for ch in chambers:
        if contains(ch.cone, p, Strictness.RELATIVE_INTERIOR):
            return ch.index
        if contains(ch.cone, p, Strictness.CLOSED):
            hit = True
    if hit:
        return BOUNDARY
    raise NotInConeError(f"{[str(a) for a in p]} lies outside every chamber")


def shared_facet_wall(a: Chamber, b: Chamber):
    """The wall vector containing a common facet of two chambers, if any."""
    I = intersect(a.cone, b.cone)
    d = max(a.cone.dim, b.cone.dim)
    if I.dim != d - 1 or a.cone.dim != b.cone.dim:
        return None
    L = a.cone.lattice
    for v, _ in a.sign_vector:
        if all(L.pair(v, g) == 0 for g in I.generators):
            return v
    return ()


def adjacency(chambers: Sequence[Chamber]) -> nx.Graph:
    """Chambers as nodes; an edge (labelled ``wall``) for each shared facet."""
    G = nx.Graph()
    G.add_nodes_from(ch.index for ch in chambers)
    for i, a in enumerate(chambers):
        for b in chambers[i + 1:]:
            # a common facet needs at least one wall where the signs differ
            if not any(sa != sb for (_, sa), (_, sb) in zip(a.sign_vector, b.sign_vector)):
                continue
            w = shared_facet_wall(a, b)
            if w is not None:
                G.add_edge(a.index, b.index, wall=w)
    return G
