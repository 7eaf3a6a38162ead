"""
Walls from a Mukai vector
=========================

In U + U take v = (1, 1, 0, 0), so (v, v) = 2.  The relevant classes lambda
are the projections to v-perp of lattice vectors x with (x, x) >= -2 and
0 <= (v, x) <= 1.  All of them satisfy (lambda, lambda) >= -5/2.
"""

from conewalls import cone_from_generators, make_mukai_setup, project, sigma_walls_meeting_cone, wall_bound
from conewalls.mukai import brute_force_sigma_walls, oracle_box

UU = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
ms = make_mukai_setup(UU, v=(1, 1, 0, 0))
print("v-perp basis:", ms.perp_basis)
print("v-perp Gram:", ms.perp.gram)
print("bound:", wall_bound(ms))

# %% Projection to v-perp, in v-perp coordinates.
print("p(0, 1, 0, 0) =", project(ms, (0, 1, 0, 0)))

# %% Walls crossing the cone spanned by two isotropic classes of v-perp.
cone = cone_from_generators(ms.perp, [(0, 1, 0), (0, 0, 1)])
walls = sigma_walls_meeting_cone(ms, cone)
for w in walls:
    print("lambda", [str(a) for a in w.lam], "square", w.lam_square, "lift", w.lift, "k", w.k)

# %% Cross-check against a box scan of the lattice vectors themselves.
box = oracle_box(ms, cone)
assert [w.lam for w in walls] == brute_force_sigma_walls(ms, cone, box)
print("brute force over a box of radius", box, "agrees")
