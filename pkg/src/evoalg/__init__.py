"""Evolution algebras of graphs and of random walks on graphs."""

from .algebra import (
    AlgebraElement,
    EvolutionAlgebra,
    Graph,
    algebra_from_graph,
    algebra_from_random_walk,
    evolution_product,
)
from .families import FamilySpec, build_family, build_graph, load_edge_list, parse_graph_spec, render_spec
from .homsolver import (
    HomVerdict,
    LinearMap,
    MonomialMap,
    build_bipartite_witness,
    build_regular_witness,
    npartite_survey,
    solve_monomial_homs,
    verify_homomorphism,
    verify_isomorphism,
)
from .polysys import Poly, generate_hom_system, poly_eval_rad
from .scalars import RadScalar, parse_scalar, rad_canonicalize

__version__ = "0.1.0"
