"""
Walls and chambers in the hyperbolic plane
==========================================

The hyperbolic plane U has Gram matrix [[0, 1], [1, 0]].  We cut the cone
spanned by (2, 1) and (1, 2) by every lattice hyperplane of bounded negative
square that crosses it inside the positive cone.
"""

from conewalls import (
    WallQuery,
    adjacency,
    brute_force_walls,
    cone_from_generators,
    derived_box,
    locate,
    make_lattice,
    subdivide,
    walls_meeting_cone,
)

# %% The lattice and the cone.  ``h`` picks the positive half of the light cone.
U = make_lattice([[0, 1], [1, 0]], h=[1, 1])
cone = cone_from_generators(U, [(2, 1), (1, 2), (1, 1)])
print("minimal generators:", cone.generators)  # (1, 1) is redundant

# %% Walls of square > -3.  Only v = (1, -1), of square -2, qualifies.
query = WallQuery(U, cone, N=3)
walls = walls_meeting_cone(query)
for w in walls:
    print("wall", w.v, "square", w.square)

# A brute-force scan over a box derived from the coefficient bounds agrees.
box = derived_box(query)
assert [w.v for w in brute_force_walls(query, box)] == [w.v for w in walls]
print("oracle box radius:", box)

# %% Lowering the bound to N = 1 leaves no walls at all.
print("N = 1:", walls_meeting_cone(WallQuery(U, cone, N=1)))

# %% Chambers.  The single wall splits the cone along the ray (1, 1).
chambers = subdivide(cone, walls)
for ch in chambers:
    print("chamber", ch.index, ch.generators, "signs", ch.sign_vector)

# Points are located exactly; points on a wall report "Boundary".
print("(3, 2) lies in chamber", locate((3, 2), chambers))
print("(1, 1) lies on", locate((1, 1), chambers))

# %% Adjacency graph: one edge, labelled by the wall it crosses.
graph = adjacency(chambers)
print("edges:", list(graph.edges(data="wall")))
