"""Pot design for the flexible tile model of DNA self-assembly."""

__version__ = "0.1.0"

from .errors import InputError, PreconditionError
from .graph import (
    Graph,
    Orientation,
    find_bridges,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    is_two_edge_connected,
    spanning_tree_count,
    strong_orientation,
)
from .iso import are_isomorphic, canonical_form
from .swap import Reconnection, SwapMove, SwapStatus, apply_swap, is_unswappable, proxy_swap_candidates
from .pot import AssemblyDesign, CohesiveEnd, Pot, TileType, assembling_pot, check_assembly, parse_pot, sources
from .families import FamilySpec, family_cover, formula_oracle, generate, kneser, kneser_triangle_delta, rook
from .cover import (
    OrientedCover,
    b3_lower_bound,
    certify_scenario3,
    derive_pot,
    design_pipeline,
    is_neighborhood_independent,
    is_vertex_cover,
    min_vertex_cover,
    neighborhood_matrix,
    t3_lower_bound,
)
from .validator import enumerate_outputs, realizes, validate_scenario3
