"""Random instance generators and shared fixtures for the test-suite."""

from __future__ import annotations

import itertools
import random

from conewalls import _exact as ex
from conewalls.cones import cone_from_generators
from conewalls.lattice import in_closed_positive_cone, make_lattice
from conewalls.walls import WallQuery, derived_box

U_GRAM = [[0, 1], [1, 0]]
SWAP = [[0, 1], [1, 0]]

# oracle boxes larger than this many points are skipped
MAX_BOX_POINTS = 3_000_000


def random_lattice(rng: random.Random, n: int):
    """Gram entries in [-3, 3], signature (1, n-1), small positive ``h``."""
    while True:
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                G[i][j] = G[j][i] = rng.randint(-3, 3)
        if ex.det(G) == 0 or ex.inertia(G)[:2] != (1, n - 1):
            continue
        for h in itertools.product(range(-2, 3), repeat=n):
            if ex.dot(h, ex.mat_vec(G, h)) > 0:
                return make_lattice(G, h)


def closed_cone_points(L, height: int = 5) -> list[tuple]:
    return [
        v for v in itertools.product(range(-height, height + 1), repeat=L.rank)
        if any(v) and in_closed_positive_cone(L, v)
    ]


def random_cone(rng: random.Random, L, height: int = 5):
    """1 to ``min(4, n+1)`` generators of height <= ``height``; isotropic
    generators are favoured when the lattice has any."""
    pts = closed_cone_points(L, height)
    iso = [v for v in pts if L.square(v) == 0]
    k = rng.randint(1, min(4, L.rank + 1))
    gens = rng.sample(pts, k)
    if iso and rng.random() < 0.4:
        gens[0] = rng.choice(iso)
    return cone_from_generators(L, gens)


def random_queries(seed: int, count: int):
    """``count`` wall queries (rank 2-4, height <= 5, N <= 6) with a
    tractable oracle box, paired with that box."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        L = random_lattice(rng, n)
        C = random_cone(rng, L)
        q = WallQuery(L, C, rng.randint(1, 6))
        box = derived_box(q)
        if (2 * box + 1) ** n > MAX_BOX_POINTS:
            continue
        out.append((q, box))
    return out


def sample_in_cone(rng: random.Random, C, weight: int = 50) -> tuple:
    """Strictly positive integer combination of the generators."""
    n = C.lattice.rank
    ws = [rng.randint(1, weight) for _ in C.generators]
    return tuple(sum(w * g[i] for w, g in zip(ws, C.generators)) for i in range(n))
