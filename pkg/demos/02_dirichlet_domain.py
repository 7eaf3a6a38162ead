"""
A Dirichlet domain for a finite group
=====================================

The swap (x1, x2) -> (x2, x1) is an isometry of U fixing the positive class
(1, 1).  Its Dirichlet domain around y = (2, 1) is the set of x with
(x, y) <= (x, g y) for every group element g.
"""

from conewalls import IsometryGroup, cone_from_generators, dirichlet_domain, make_lattice, verify_tiling

U = make_lattice([[0, 1], [1, 0]], h=[1, 1])
swap = [[0, 1], [1, 0]]
G = IsometryGroup(U, [swap])

# %% The ambient cone is the closed positive quadrant, which is swap-invariant.
ambient = cone_from_generators(U, [(1, 0), (0, 1)])
D = dirichlet_domain(G, ambient, y=(2, 1), max_depth=5)
print("domain:", D.domain.generators)
print("status:", D.status, "at depth", D.depth)
print("facet words:", [el.name for el in D.contributing_elements])

# %% The group is finite, so the search closes and the answer is certified.
# Sampling then confirms the translates cover the ambient cone with no
# interior overlaps.  The cover fraction is an exact rational.
report = verify_tiling(D, G, samples=200, depth=1, seed=0)
print("cover fraction:", report.cover_fraction)
print("interior collisions:", report.collisions)
print("witness counts:", dict(report.witnesses))

# %% A basepoint on the mirror has a nontrivial stabilizer and is refused.
try:
    dirichlet_domain(G, ambient, y=(1, 1), max_depth=5)
except Exception as err:  # StabilizerError
    print(type(err).__name__, "-", err)
