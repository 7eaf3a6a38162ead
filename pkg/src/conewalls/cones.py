"""Rational polyhedral cones with synchronised generator and facet descriptions.

Facets are stored as lattice vectors ``w`` acting through the Gram pairing,
``{x : (w, x) >= 0}``.  For a cone that is not full dimensional the facet
functional is only defined modulo the annihilator of the span; we pick the
representative whose coordinate covector ``G w`` lies in the (Euclidean) span
of the cone, which makes the facet list canonical.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _exact as ex
from .errors import PreconditionError
from .lattice import ConePosition, Lattice, cone_position


class Strictness(enum.Enum):
    CLOSED = "Closed"
    RELATIVE_INTERIOR = "RelativeInterior"


class Sign(enum.Enum):
    GE = ">=0"
    LE = "<=0"
    EQ = "=0"


@dataclass(frozen=True, eq=False)
class RationalCone:
    lattice: Lattice
    generators: tuple
    facets: tuple
    equations: tuple
    dim: int
    pointed: bool
    lineality: tuple = ()
    _facet_covectors: tuple = field(default=(), repr=False)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def covectors(self) -> tuple:
        return self._facet_covectors

    def interior_point(self) -> tuple:
        """A point of the relative interior (sum of the generators)."""
        n = self.lattice.rank
        return tuple(sum(g[i] for g in self.generators) for i in range(n))

    def contains(self, x, strictness: Strictness = Strictness.CLOSED) -> bool:
        return contains(self, x, strictness)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalCone):
            return NotImplemented
        return same_cone(self, other)

    def __hash__(self):
        return hash((self.dim, self.lattice.gram))

    def __repr__(self):
        return f"RationalCone(generators={list(self.generators)}, dim={self.dim})"


# --- construction -----------------------------------------------------------

def _projector_onto(basis: list) -> list:
    """Rows of ``(B^T B)^{-1} B^T`` for the column set ``basis``."""
    gram = [[ex.dot(a, b) for b in basis] for a in basis]
    inv = ex.inverse(gram)
    n = len(basis[0])
    return [[sum(inv[i][k] * basis[k][j] for k in range(len(basis))) for j in range(n)]
            for i in range(len(basis))]


def _euclid_project_out(f: Sequence, eqs: Sequence) -> tuple:
    """Component of covector ``f`` Euclidean-orthogonal to ``span(eqs)``."""
    if not eqs:
        return tuple(ex.frac(a) for a in f)
    P = _projector_onto(list(eqs))
    coeffs = [ex.dot(row, f) for row in P]
    return tuple(ex.frac(f[j]) - sum(c * e[j] for c, e in zip(coeffs, eqs)) for j in range(len(f)))


def _to_functional(L: Lattice, f: Sequence) -> tuple:
    w = ex.primitive_int(L.functional_from_covector(f))
    return tuple(int(a) for a in w)


def _assemble(L: Lattice, gens, facets, eqs, dim, lineality=()) -> RationalCone:
    gens = tuple(sorted(set(gens)))
    facets = tuple(sorted(set(facets)))
    covs = tuple(L.covector(w) for w in facets)
    return RationalCone(
        L, gens, facets, tuple(eqs), dim, not lineality, tuple(lineality), covs
    )


def _normalise_gens(gens) -> list[tuple]:
    out = []
    seen = set()
    for g in gens:
        p = ex.primitive_int(g)
        if any(p) and p not in seen:
            seen.add(p)
            out.append(tuple(int(a) for a in p))
    return out


def _build(L: Lattice, raw_gens) -> RationalCone:
    n = L.rank
    gens = _normalise_gens(raw_gens)
    if not gens:
        return _assemble(L, (), (), ex.identity(n), 0)
    d = ex.rank(gens)
    eqs = [tuple(int(a) for a in e) for e in ex.nullspace(gens, n)]
    B = [gens[i] for i in ex.independent_subset(gens)]
    P = _projector_onto(B)
    coords = [ex.primitive_int([ex.dot(row, g) for row in P]) for g in gens]

    # facet normals of the full-dimensional image in Q^d
    phis = []
    seen = set()
    if d == 1:
        candidates = [((1,),)]
    else:
        candidates = (
            ex.nullspace([coords[i] for i in idx], d)
            for idx in ex.subsets_of_rank(coords, d - 1)
        )
    for ker in candidates:
        phi = tuple(ker[0])
        vals = [ex.dot(phi, c) for c in coords]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            phi = tuple(-a for a in phi)
        else:
            continue
        if phi not in seen:
            seen.add(phi)
            phis.append(phi)

    frank = ex.rank(phis) if phis else 0
    ell = d - frank

    def tight_rank(c):
        return ex.rank([phi for phi in phis if ex.dot(phi, c) == 0]) if phis else 0

    # covector on Q^n for each phi: f = B (B^T B)^{-1} phi
    def lift(phi):
        gram = [[ex.dot(a, b) for b in B] for a in B]
        alpha = ex.mat_vec(ex.inverse(gram), phi)
        return tuple(sum(alpha[k] * B[k][j] for k in range(d)) for j in range(n))

    facets = [_to_functional(L, lift(phi)) for phi in phis]

    if ell == 0:
        extreme = [g for g, c in zip(gens, coords) if tight_rank(c) == d - 1]
        return _assemble(L, extreme, facets, eqs, d)

    lin_coords = ex.nullspace(phis, d) if phis else [tuple(r) for r in ex.identity(d)]
    lin = [tuple(int(a) for a in ex.primitive_int(
        [sum(c[k] * B[k][j] for k in range(d)) for j in range(n)])) for c in lin_coords]
    out = []
    for l in lin:
        out.append(l)
        out.append(tuple(-a for a in l))
    if frank:
        Pl = _projector_onto(lin)
        for g, c in zip(gens, coords):
            if all(ex.dot(phi, c) == 0 for phi in phis):
                continue
            if tight_rank(c) != d - ell - 1:
                continue
            coeff = [ex.dot(row, g) for row in Pl]
            gp = [g[j] - sum(a * l[j] for a, l in zip(coeff, lin)) for j in range(n)]
            out.append(tuple(int(a) for a in ex.primitive_int(gp)))
    return _assemble(L, out, facets, eqs, d, lineality=lin)


def cone_from_generators(L: Lattice, gens: Sequence[Sequence]) -> RationalCone:
    """Cone spanned by ``gens`` with minimal generators and facet functionals.

    Zero vectors are dropped; an empty or all-zero input gives the zero cone.
    """
    return _build(L, [tuple(ex.frac(a) for a in g) for g in gens])


# --- queries ----------------------------------------------------------------

def contains(C: RationalCone, x, strictness: Strictness = Strictness.CLOSED) -> bool:
    if any(ex.dot(e, x) != 0 for e in C.equations):
        return False
    vals = [ex.dot(f, x) for f in C._facet_covectors]
    if strictness is Strictness.CLOSED:
        return all(v >= 0 for v in vals)
    return all(v > 0 for v in vals)


def same_cone(A: RationalCone, B: RationalCone) -> bool:
    if A.dim != B.dim:
        return False
    if A.pointed and B.pointed:
        return A.generators == B.generators
    return all(contains(B, g) for g in A.generators) and all(contains(A, g) for g in B.generators)


def pairing_values(C: RationalCone, w) -> list:
    L = C.lattice
    return [L.pair(w, g) for g in C.generators]


def splits(C: RationalCone, w) -> bool:
    """True when the hyperplane ``w``-perp cuts the relative interior of ``C``."""
    vals = pairing_values(C, w)
    return any(v > 0 for v in vals) and any(v < 0 for v in vals)


# --- cutting ----------------------------------------------------------------

def _cut(C: RationalCone, f: Sequence) -> RationalCone:
    """``C`` intersected with ``{x : f . x >= 0}`` for a coordinate covector."""
    L = C.lattice
    f = ex.primitive_int(f) if any(f) else tuple(0 for _ in f)
    vals = [ex.dot(f, g) for g in C.generators]
    if all(v >= 0 for v in vals):
        return C
    if all(v <= 0 for v in vals):
        return _build(L, [g for g, v in zip(C.generators, vals) if v == 0])
    pos = [(g, v) for g, v in zip(C.generators, vals) if v > 0]
    neg = [(g, v) for g, v in zip(C.generators, vals) if v < 0]
    keep = [g for g, v in zip(C.generators, vals) if v >= 0]
    if not C.pointed:
        combos = [
            tuple(-vn * a + vp * b for a, b in zip(gp, gn))
            for gp, vp in pos for gn, vn in neg
        ]
        return _build(L, keep + combos)

    d = C.dim
    covs = C._facet_covectors
    tight = {g: frozenset(k for k, c in enumerate(covs) if ex.dot(c, g) == 0) for g in C.generators}
    new = list(keep)
    for gp, vp in pos:
        for gn, vn in neg:
            common = tight[gp] & tight[gn]
            if len(common) < d - 2:
                continue
            if d > 2 and ex.rank([covs[k] for k in common]) != d - 2:
                continue
            new.append(tuple(-vn * a + vp * b for a, b in zip(gp, gn)))
    new = _normalise_gens(new)

    fproj = _euclid_project_out(f, C.equations)
    cand_covs = list(covs) + [tuple(ex.primitive_int(fproj))]
    facets = []
    for c in cand_covs:
        t = [g for g in new if ex.dot(c, g) == 0]
        if (ex.rank(t) if t else 0) == d - 1:
            facets.append(_to_functional(L, c))
    return _assemble(L, new, facets, C.equations, d)


def intersect_halfspace(C: RationalCone, w: Sequence, sign: Sign | str = Sign.GE) -> RationalCone:
    """``C`` intersected with ``{x : (w, x) >= 0}``, ``<= 0`` or ``= 0``."""
    sign = Sign(sign) if not isinstance(sign, Sign) else sign
    L = C.lattice
    w = tuple(ex.frac(a) for a in w)
    f = L.covector(w)
    if sign is Sign.GE:
        return _cut(C, f)
    neg = tuple(-a for a in f)
    if sign is Sign.LE:
        return _cut(C, neg)
    half = _cut(C, f)
    vals = [ex.dot(f, g) for g in half.generators]
    if all(v == 0 for v in vals):
        return half
    return _build(L, [g for g, v in zip(half.generators, vals) if v == 0])


def intersect(A: RationalCone, B: RationalCone) -> RationalCone:
    C = A
    for f in B._facet_covectors:
        C = _cut(C, f)
        if C.is_zero:
            return C
    for e in B.equations:
        C = _cut(C, e)
        C = _cut(C, tuple(-a for a in e))
        if C.is_zero:
            return C
    return C


def image(C: RationalCone, M: Sequence[Sequence[int]]) -> RationalCone:
    """``M(C)`` for an integer matrix acting on column vectors."""
    return _build(C.lattice, [ex.mat_vec(M, g) for g in C.generators])


def face(C: RationalCone, w: Sequence) -> RationalCone:
    """Generators of ``C`` on ``w``-perp (a face when ``w`` supports ``C``)."""
    L = C.lattice
    return _build(L, [g for g in C.generators if L.pair(w, g) == 0])


def facet_cones(C: RationalCone) -> list[tuple[tuple, RationalCone]]:
    return [(w, face(C, w)) for w in C.facets]


# --- walls --------------------------------------------------------------------

def check_in_closed_positive_cone(C: RationalCone) -> list[ConePosition]:
    L = C.lattice
    positions = [cone_position(L, g) for g in C.generators]
    for g, p in zip(C.generators, positions):
        if p not in (ConePosition.INTERIOR_POSITIVE, ConePosition.BOUNDARY_POSITIVE):
            raise PreconditionError(f"generator {list(g)} is not in the closed positive cone")
    return positions


def wall_separates(C: RationalCone, v: Sequence[int]) -> bool:
    """Whether ``v``-perp meets ``C`` in a point of the open positive cone.

    ``C`` must lie in the closed positive cone.  A strict sign change across
    two generators gives a point in the open segment between them, which is
    positive because distinct rays of the closed cone pair positively.
    Otherwise ``v``-perp meets ``C`` in the face spanned by the generators it
    contains; that face has a positive point iff it holds a positive
    generator or two independent (hence positively pairing) ones.
    """
    positions = check_in_closed_positive_cone(C)
    L = C.lattice
    vals = [L.pair(v, g) for g in C.generators]
    if any(x > 0 for x in vals) and any(x < 0 for x in vals):
        return True
    zeros = [p for p, x in zip(positions, vals) if x == 0]
    if any(p is ConePosition.INTERIOR_POSITIVE for p in zeros):
        return True
    return len(zeros) >= 2
