"""Complete intersection testing for graph edge algebras.

The edge algebra of a graph G is the subalgebra of a polynomial ring
generated by the products of endpoint variables, one per edge. Its
defining ideal is the kernel of the map sending each edge variable to that
product. This package decides whether that kernel is a complete
intersection (generated by as few elements as its height), via two fully
independent routes: a combinatorial test on chordless cycles for bipartite
graphs, and a fiber census over edge monomials for any graph; a Groebner
engine supplies generating sets, h-vectors, and cross-checks.
"""

from ._kernels import BACKEND
from .binomial import (
    Binomial,
    BinomialBasis,
    GradedEngine,
    WalkMatch,
    WalkMatchReport,
    buchberger,
    cycle_generators,
    elimination_generators,
    groebner_walk_subset,
    kernel_membership,
    minimalize,
    psi,
)
from .cycles import (
    CiVerdict,
    CountCheck,
    Cycle,
    Walk,
    chordless_count_check,
    chordless_cycles,
    is_ci_graph,
    minimal_even_walks,
    smallest_even_walk_length,
)
from .errors import DomainError, EdgeAlgebraError, ParseError, ResourceCapError
from .families import cube, generate, gn, hn, octagon, remark
from .graph import (
    Bipartition,
    Graph,
    PlanarityReport,
    blocks,
    connected_components,
    height,
    is_bipartite,
    is_connected,
    is_planar,
    krull_dim,
    parse_graph,
    shrink_edge,
    to_dot,
    triangle_count_at,
)
from .hilbert import (
    HPrefixReport,
    HVector,
    MonomialIdeal,
    h_vector,
    hilbert_function,
    kernel_groebner_basis,
    verify_h_prefix,
)
from .oracle import (
    Fiber,
    GeneratorCensus,
    ci_oracle,
    default_census_depth,
    fibers_up_to,
    generator_degree_bound,
    minimal_generator_census,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Binomial",
    "BinomialBasis",
    "Bipartition",
    "CiVerdict",
    "CountCheck",
    "Cycle",
    "DomainError",
    "EdgeAlgebraError",
    "Fiber",
    "GeneratorCensus",
    "GradedEngine",
    "Graph",
    "HPrefixReport",
    "HVector",
    "MonomialIdeal",
    "ParseError",
    "PlanarityReport",
    "ResourceCapError",
    "Walk",
    "WalkMatch",
    "WalkMatchReport",
    "blocks",
    "buchberger",
    "chordless_count_check",
    "chordless_cycles",
    "ci_oracle",
    "connected_components",
    "cube",
    "cycle_generators",
    "default_census_depth",
    "elimination_generators",
    "fibers_up_to",
    "generate",
    "generator_degree_bound",
    "gn",
    "groebner_walk_subset",
    "h_vector",
    "height",
    "hilbert_function",
    "hn",
    "is_bipartite",
    "is_ci_graph",
    "is_connected",
    "is_planar",
    "kernel_groebner_basis",
    "kernel_membership",
    "krull_dim",
    "minimal_even_walks",
    "minimal_generator_census",
    "minimalize",
    "octagon",
    "parse_graph",
    "psi",
    "remark",
    "shrink_edge",
    "smallest_even_walk_length",
    "to_dot",
    "triangle_count_at",
    "verify_h_prefix",
]
