"""Isometry groups acting on the positive cone: orbits, Dirichlet domains,
tiling checks, face pairings and the classification of chambers into orbits
of wall-complement components."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from . import _exact as ex
from .chambers import Chamber
from .cones import (
    RationalCone,
    Strictness,
    contains,
    face,
    image,
    intersect,
    intersect_halfspace,
)
from .errors import NotAnIsometryError, PairingError, PreconditionError, StabilizerError
from .lattice import ConePosition, Lattice, cone_position, primitive
from .walls import Wall

CERTIFIED = "certified"
HEURISTIC = "heuristic"


def _mat(M) -> tuple:
    return tuple(tuple(int(a) for a in row) for row in M)


def _act(M, x) -> tuple:
    return tuple(ex.normalize_number(a) for a in ex.mat_vec(M, x))


def check_isometry(L: Lattice, M) -> bool:
    """``M^T G M = G``, ``det M = +-1`` and ``M h`` in the positive cone."""
    n = L.rank
    try:
        M = _mat(M)
    except (TypeError, ValueError):
        return False
    if len(M) != n or any(len(row) != n for row in M):
        return False
    if ex.mat_mul(ex.mat_mul(ex.transpose(M), L.gram), M) != L.gram:
        return False
    if abs(ex.det(M)) != 1:
        return False
    return cone_position(L, ex.mat_vec(M, L.h)) is ConePosition.INTERIOR_POSITIVE


@dataclass(frozen=True)
class Element:
    matrix: tuple
    word: tuple  # letter names, applied right to left

    @property
    def name(self) -> str:
        return "*".join(self.word) if self.word else "id"


class IsometryGroup:
    """Group generated by integral isometries preserving ``C+``.

    Inverses are adjoined as extra letters unless a generator is an involution.
    """

    def __init__(self, lattice: Lattice, generators: Sequence, names: Sequence[str] | None = None):
        self.lattice = lattice
        self.generators = tuple(_mat(M) for M in generators)
        names = list(names) if names is not None else [f"g{i}" for i in range(len(self.generators))]
        self.letters: list[tuple[str, tuple]] = []
        ident = ex.identity(lattice.rank)
        seen = {ident}
        for name, M in zip(names, self.generators):
            if not check_isometry(lattice, M):
                raise NotAnIsometryError(f"generator {name} is not an isometry preserving C+")
            inv = _mat(ex.inverse(M))
            for nm, A in ((name, M), (f"{name}^-1", inv)):
                if A not in seen:
                    seen.add(A)
                    self.letters.append((nm, A))

    @property
    def identity(self) -> tuple:
        return ex.identity(self.lattice.rank)

    def layers(self) -> Iterator[list[Element]]:
        """Breadth-first layers of new elements by word length (from 1).

        Stops after yielding an empty layer, which means the group is finite
        and fully enumerated.
        """
        ident = self.identity
        visited = {ident}
        frontier = [Element(ident, ())]
        while True:
            new = []
            for el in frontier:
                for name, A in self.letters:
                    P = ex.mat_mul(el.matrix, A)
                    if P not in visited:
                        visited.add(P)
                        new.append(Element(P, el.word + (name,)))
            yield new
            if not new:
                return
            frontier = new

    def elements(self, depth: int) -> tuple[list[Element], bool]:
        """All elements of word length ``<= depth`` and whether the BFS closed."""
        out = [Element(self.identity, ())]
        closed = False
        gen = self.layers()
        for k in range(depth + 1):
            layer = next(gen)
            if not layer:
                closed = True
                break
            if k < depth:
                out.extend(layer)
        return out, closed


def orbit(Gp: IsometryGroup, y: Sequence, depth: int) -> set:
    els, _ = Gp.elements(depth)
    return {_act(el.matrix, y) for el in els}


@dataclass(frozen=True)
class StabilizerStatus:
    status: str  # "Trivial" | "NonTrivialWitness" | "UnknownAtDepth"
    witness: Element | None = None


def stabilizer_trivial(Gp: IsometryGroup, y: Sequence, depth: int) -> StabilizerStatus:
    y = tuple(ex.frac(a) for a in y)
    gen = Gp.layers()
    for _ in range(depth):
        layer = next(gen)
        if not layer:
            return StabilizerStatus("Trivial")
        for el in layer:
            if tuple(ex.mat_vec(el.matrix, y)) == y:
                return StabilizerStatus("NonTrivialWitness", el)
    if not next(gen):
        return StabilizerStatus("Trivial")
    return StabilizerStatus("UnknownAtDepth")


@dataclass(frozen=True)
class DirichletDomain:
    basepoint: tuple
    domain: RationalCone
    contributing_elements: tuple  # Elements whose inequality cuts a facet
    status: str
    depth: int
    ambient: RationalCone = field(repr=False, default=None)


def _contributors(D: RationalCone, explored) -> tuple:
    L = D.lattice
    by_facet = {}
    for el, w in explored:
        tight = frozenset(g for g in D.generators if L.pair(w, g) == 0)
        if len(tight) == len(D.generators):
            continue
        if (ex.rank(list(tight)) if tight else 0) == D.dim - 1 and tight not in by_facet:
            by_facet[tight] = el
    return tuple(by_facet[k] for k in sorted(by_facet, key=lambda t: sorted(t)))


def dirichlet_domain(Gp: IsometryGroup, ambient: RationalCone, y: Sequence, max_depth: int) -> DirichletDomain:
    """``{x in ambient : (x, y) <= (x, g y)}`` over words of growing length.

    Certified when the group BFS closes (finite group, every element used);
    otherwise the first depth after which the cone is unchanged for two more
    layers is reported as heuristic.
    """
    L = Gp.lattice
    y = tuple(ex.frac(a) for a in y)
    if cone_position(L, y) is not ConePosition.INTERIOR_POSITIVE:
        raise PreconditionError("basepoint must be in the open positive cone")
    if not contains(ambient, y, Strictness.RELATIVE_INTERIOR):
        raise PreconditionError("basepoint must lie in the relative interior of the ambient cone")
    history = [ambient]
    explored = []
    D = ambient
    gen = Gp.layers()

    def done(status, depth, cone):
        assert contains(cone, y, Strictness.RELATIVE_INTERIOR)
        return DirichletDomain(
            tuple(ex.normalize_number(a) for a in y), cone, _contributors(cone, explored),
            status, depth, ambient,
        )

    for k in range(1, max_depth + 1):
        layer = next(gen)
        if not layer:
            return done(CERTIFIED, k - 1, D)
        for el in layer:
            gy = tuple(ex.mat_vec(el.matrix, y))
            if gy == y:
                raise StabilizerError(f"basepoint is fixed by {el.name}", el)
            w = tuple(a - b for a, b in zip(gy, y))
            explored.append((el, w))
            D = intersect_halfspace(D, w, ">=0")
        history.append(D)
        if k >= 2 and history[k] == history[k - 1] == history[k - 2]:
            # before settling for a heuristic answer, see whether the group
            # is finite within the depth budget (cheap: no cone cuts)
            rest = []
            for extra in range(k + 1, max_depth + 2):
                layer = next(gen)
                if not layer:
                    for el in rest:
                        gy = tuple(ex.mat_vec(el.matrix, y))
                        if gy == y:
                            raise StabilizerError(f"basepoint is fixed by {el.name}", el)
                        w = tuple(a - b for a, b in zip(gy, y))
                        explored.append((el, w))
                        D = intersect_halfspace(D, w, ">=0")
                    return done(CERTIFIED, extra - 1, D)
                rest.extend(layer)
            return done(HEURISTIC, k - 2, history[k - 2])
    if not next(gen):
        return done(CERTIFIED, max_depth, D)
    return done(HEURISTIC, max_depth, D)


@dataclass
class TilingReport:
    samples: int
    covered: int
    cover_fraction: Fraction
    witnesses: Counter
    collisions: int
    uncovered: list
    seed: int | None


def sample_points(C: RationalCone, samples: int, seed) -> list[tuple]:
    rng = random.Random(seed)
    n = C.lattice.rank
    pts = []
    for _ in range(samples):
        weights = [rng.randint(1, 64) for _ in C.generators]
        pts.append(tuple(sum(wt * g[i] for wt, g in zip(weights, C.generators)) for i in range(n)))
    return pts


def verify_tiling(D: DirichletDomain, Gp: IsometryGroup, samples: int, depth: int, seed=0) -> TilingReport:
    """Sample the ambient cone and look for translates landing in the domain.

    Also counts interior collisions: sampled interior points ``p`` of the
    domain with some ``g != id`` (length ``<= depth``) and ``g p`` again in
    the interior.  Sampling refutes, it never certifies.
    """
    els, _ = Gp.elements(depth)
    ambient = D.ambient if D.ambient is not None else D.domain
    pts = sample_points(ambient, samples, seed)
    witnesses: Counter = Counter()
    uncovered = []
    collisions = 0
    covered = 0
    for p in pts:
        hit = None
        for el in els:
            if contains(D.domain, ex.mat_vec(el.matrix, p)):
                hit = el
                break
        if hit is None:
            uncovered.append(p)
        else:
            covered += 1
            witnesses[hit.name] += 1
        if contains(D.domain, p, Strictness.RELATIVE_INTERIOR):
            for el in els[1:]:
                if contains(D.domain, ex.mat_vec(el.matrix, p), Strictness.RELATIVE_INTERIOR):
                    collisions += 1
                    break
    frac = Fraction(covered, samples) if samples else Fraction(1)
    return TilingReport(samples, covered, frac, witnesses, collisions, uncovered, seed)


# --- face pairings and chamber orbits -------------------------------------

@dataclass(frozen=True)
class PairingEntry:
    facet: tuple  # facet functional w of the cone
    matrix: tuple
    word: tuple = ()

    @property
    def name(self) -> str:
        return "*".join(self.word) if self.word else "g"


@dataclass(frozen=True)
class FacePairing:
    cone: RationalCone
    entries: tuple
    unpaired: tuple = ()


def find_face_pairings(cone: RationalCone, Gp: IsometryGroup, depth: int) -> FacePairing:
    """For each facet ``F``, the shortest ``g != id`` with ``g(cone)`` meeting
    ``cone`` exactly in ``F`` from the far side of ``F``."""
    L = cone.lattice
    els, _ = Gp.elements(depth)
    translates = [(el, image(cone, el.matrix)) for el in els[1:]]
    entries = []
    unpaired = []
    for w in cone.facets:
        F = face(cone, w)
        found = None
        for el, T in translates:
            if any(L.pair(w, g) > 0 for g in T.generators):
                continue
            I = intersect(T, cone)
            if I.dim == cone.dim - 1 and I == F:
                found = el
                break
        if found is None:
            unpaired.append(w)
        else:
            entries.append(PairingEntry(w, found.matrix, found.word))
    return FacePairing(cone, tuple(entries), tuple(unpaired))


def validate_pairing(pairing: FacePairing):
    """Each entry: an isometry, a facet of the cone, and ``g^-1`` of that
    facet again a facet (so ``g(cone)`` contains the facet as a facet)."""
    C = pairing.cone
    L = C.lattice
    facet_cones = [face(C, w) for w in C.facets]
    for e in pairing.entries:
        if not check_isometry(L, e.matrix):
            raise PairingError(f"pairing element {e.name} is not an isometry preserving C+")
        if tuple(e.facet) not in C.facets:
            raise PairingError(f"{list(e.facet)} is not a facet functional of the cone")
        F = face(C, e.facet)
        pre = image(F, _mat(ex.inverse(e.matrix)))
        if not any(pre == G for G in facet_cones):
            raise PairingError(f"pairing element {e.name} does not carry a facet onto {list(e.facet)}")


@dataclass
class ChamberOrbits:
    classes: list
    count: int
    status: str
    depth: int
    witnesses: list  # (i, j, element, kind) with element(chamber j) meeting chamber i


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def chamber_orbits(
    chambers: Sequence[Chamber],
    pairing: FacePairing,
    walls: Sequence,
    Gp: IsometryGroup | None,
    depth: int,
) -> ChamberOrbits:
    """Classes of chambers whose interiors lie in one orbit of wall-complement
    components.

    Translates ``g(cone)`` are explored over words in the pairing elements;
    only translates touching the cone in codimension ``<= 1`` are extended.
    Chamber ``j`` is related to chamber ``i`` when ``g(chamber j)`` overlaps
    chamber ``i`` in full dimension, or meets it in a common facet that lies
    on no wall hyperplane.  The search is certified once a layer produces no
    new touching translate.
    """
    validate_pairing(pairing)
    C = pairing.cone
    L = C.lattice
    if Gp is not None:
        for e in pairing.entries:
            if not check_isometry(Gp.lattice, e.matrix):
                raise PairingError(f"pairing element {e.name} is not an isometry of the group lattice")
    d = C.dim
    wall_vs = sorted({primitive(L, w.v if isinstance(w, Wall) else w) for w in walls if any(w.v if isinstance(w, Wall) else w)})
    letters = []
    ident = ex.identity(L.rank)
    seen = {ident}
    for e in pairing.entries:
        inv = _mat(ex.inverse(e.matrix))
        for nm, A in ((e.name, e.matrix), (f"({e.name})^-1", inv)):
            if A not in seen:
                seen.add(A)
                letters.append((nm, A))

    uf = _UnionFind([ch.index for ch in chambers])
    witnesses = []

    def relate(el: Element):
        moved_walls = wall_vs + [ex.mat_vec(el.matrix, v) for v in wall_vs]
        for ch_j in chambers:
            Tj = image(ch_j.cone, el.matrix)
            if intersect(Tj, C).dim < d - 1:
                continue
            for ch_i in chambers:
                I = intersect(Tj, ch_i.cone)
                if I.dim == d:
                    kind = "overlap"
                elif I.dim == d - 1 and not any(
                    all(L.pair(v, g) == 0 for g in I.generators) for v in moved_walls
                ):
                    kind = "cross"
                else:
                    continue
                uf.union(ch_i.index, ch_j.index)
                witnesses.append((ch_i.index, ch_j.index, el, kind))

    def touching(P) -> bool:
        return intersect(image(C, P), C).dim >= d - 1

    visited = {ident}
    frontier = [Element(ident, ())]
    status, reached = HEURISTIC, depth
    for layer in range(1, depth + 2):
        new = []
        for el in frontier:
            for nm, A in letters:
                P = ex.mat_mul(el.matrix, A)
                if P in visited:
                    continue
                visited.add(P)
                if touching(P):
                    new.append(Element(P, el.word + (nm,)))
        if not new:
            status, reached = CERTIFIED, layer - 1
            break
        if layer == depth + 1:
            break
        for el in new:
            relate(el)
        frontier = new

    groups: dict = {}
    for ch in chambers:
        groups.setdefault(uf.find(ch.index), []).append(ch.index)
    classes = sorted(sorted(g) for g in groups.values())
    return ChamberOrbits(classes, len(classes), status, reached, witnesses)
