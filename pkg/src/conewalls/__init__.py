"""Walls, chambers and fundamental domains for cones in hyperbolic lattices.

All decisions are made in exact integer or rational arithmetic.
"""

from .chambers import BOUNDARY, Chamber, adjacency, locate, subdivide
from .cones import (
    RationalCone,
    Sign,
    Strictness,
    cone_from_generators,
    contains,
    face,
    image,
    intersect,
    intersect_halfspace,
    same_cone,
    wall_separates,
)
from .errors import *  # noqa: F401,F403
from .groups import (
    FacePairing,
    IsometryGroup,
    PairingEntry,
    chamber_orbits,
    check_isometry,
    dirichlet_domain,
    find_face_pairings,
    orbit,
    stabilizer_trivial,
    verify_tiling,
)
from .lattice import (
    ConePosition,
    Lattice,
    cone_position,
    make_lattice,
    orthogonal_complement_basis,
    primitive,
    short_vectors,
)
from .mukai import (
    MukaiSetup,
    brute_force_sigma_walls,
    make_mukai_setup,
    project,
    sigma_walls_meeting_cone,
    wall_bound,
)
from .walls import (
    Wall,
    WallQuery,
    brute_force_walls,
    derived_box,
    walls_meeting_cone,
    walls_on_isotropic_plane,
    walls_on_segment,
)

__version__ = "0.1.0"
