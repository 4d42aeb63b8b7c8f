"""Finite Boolean set algebras, anticlique algebras of (hyper)graphs, and
n-independence / n-freeness decision procedures."""
from .algebra import (
    OMEGA, Element, GeneratorFamily, Homomorphism, PartialMap, SetAlgebra, closure,
    elementary_product, is_n_preserving, parse_degree, sikorski_extends,
)
from .config import Budgets, default_budgets, using_budgets
from .errors import (
    BudgetError, DimensionError, FreebooleError, MembershipError, ParseError,
    PreconditionError, TheoremCheckFailure,
)
from .free import (
    anticlique_algebra, clique_algebra, extend_n_preserving, freeness_degree_of_algebra,
    independence_report, is_n_independent, perp_hypergraph, roundtrip, roundtrip_check,
)
from .graphs import Graph, Hypergraph, Poset, enumerate_anticliques, enumerate_cliques

__all__ = [
    "OMEGA", "Element", "GeneratorFamily", "Homomorphism", "PartialMap", "SetAlgebra",
    "closure", "elementary_product", "is_n_preserving", "parse_degree", "sikorski_extends",
    "Budgets", "default_budgets", "using_budgets",
    "BudgetError", "DimensionError", "FreebooleError", "MembershipError", "ParseError",
    "PreconditionError", "TheoremCheckFailure",
    "anticlique_algebra", "clique_algebra", "extend_n_preserving",
    "freeness_degree_of_algebra", "independence_report", "is_n_independent",
    "perp_hypergraph", "roundtrip", "roundtrip_check",
    "Graph", "Hypergraph", "Poset", "enumerate_anticliques", "enumerate_cliques",
]
