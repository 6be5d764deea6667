"""Fall colorings of Kneser graphs: constructions, verification and exhaustive search."""

__version__ = "0.1.0"

from .bounds import closed_form_spectrum, fall_bounds, hilton_milner
from .coloring import (
    Coloring,
    VertexMap,
    colorful_vertices,
    compose_maps,
    is_fall,
    is_proper,
    pullback_coloring,
    verify_type2_hom,
)
from .combinatorics import (
    BlockDesign,
    SubsetLabel,
    binomial,
    colex_rank,
    colex_unrank,
    construct_sts,
    verify_design,
)
from .constructions import (
    coloring_from_design,
    lift_coloring,
    prop4_coloring,
    star_triangle_coloring,
    thm1_map,
)
from .graph import Graph, closed_neighborhood, kneser
from .solver import enumerate_mis, fall_spectrum, find_fall_coloring
