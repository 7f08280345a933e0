"""Graph homomorphisms as a thin category: constructions, functors and adjoints."""

from .adjoints import delta_right, omega2, omega3, omega_odd
from .graphs import (
    Digraph, Graph, GraphFormatError, cartesian_product, direct_product, disjoint_union,
    format_graph, identify, induced_subgraph, lexicographic_product, make_circular_complete,
    make_complete, make_cycle, make_directed_path, make_edgeless, make_kneser, make_path,
    make_pendant_join, make_single_loop, make_transitive_tournament, orient, parse_graph,
    read_graph, reverse, symmetrize, write_graph,
)
from .hom import (
    INFINITY, SearchTimeout, TooManyHomomorphisms, chromatic_number, circular_chromatic_number,
    core_reduce, hom_enumerate, hom_equivalent, hom_exists, hom_project, is_homomorphism, odd_girth,
)
from .pultr import (
    PultrTemplate, TemplateError, chain_left, chain_right, delta, delta_left, gamma_functor,
    lambda_functor, shift_graph, template_arc, template_box2, template_path, template_product,
    validate_template,
)

__version__ = "0.1.0"
