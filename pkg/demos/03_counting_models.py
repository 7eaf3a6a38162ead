"""
Counting chamber orbits
=======================

Chambers of a cone Pi are identified when a gluing of the facets of Pi
carries one onto another without crossing a wall.  With the swap gluing the
two outer facets of Pi = cone<(2, 1), (1, 2)>, the two chambers on either
side of the wall (1, -1) become one class.  Without any gluing they stay
apart.
"""

from conewalls import (
    FacePairing,
    IsometryGroup,
    PairingEntry,
    chamber_orbits,
    cone_from_generators,
    find_face_pairings,
    make_lattice,
    subdivide,
)

U = make_lattice([[0, 1], [1, 0]], h=[1, 1])
swap = ((0, 1), (1, 0))
G = IsometryGroup(U, [swap])
Pi = cone_from_generators(U, [(2, 1), (1, 2)])
walls = [(1, -1)]
chambers = subdivide(Pi, walls)

# %% The facet through (2, 1) has functional (2, -1).  Swap sends the other
# facet onto it.
glued = FacePairing(Pi, (PairingEntry((2, -1), swap, ("swap",)),))
for depth in (1, 3, 6):
    res = chamber_orbits(chambers, glued, walls, G, depth)
    print(f"depth {depth}: classes {res.classes} ({res.status})")

# %% No gluing: the wall may not be crossed, so two classes remain.
res = chamber_orbits(chambers, FacePairing(Pi, ()), walls, G, 3)
print("without pairing:", res.classes, res.count)

# %% The automatic search refuses the swap as a gluing of Pi, because swap
# maps Pi onto itself instead of onto a neighbour.
print("unpaired facets:", find_face_pairings(Pi, G, 3).unpaired)
