"""Equating maximum degrees by vertex deletion: exact f(G), brute-force f_k,
constructive upper-bound procedures and the extremal families."""

from .certificate import Certificate, make_certificate, verify_certificate
from .exactf import DeletionTrace, diff_upper_bound, exact_f
from .graph import (
    DegreeView,
    Graph,
    GraphError,
    components,
    degree_view,
    delete_vertices,
    induced_subgraph,
    is_forest,
    random_forest,
    random_graph,
    survivors,
)
from .oracle import brute_feasible, brute_fk

__all__ = [
    "Certificate",
    "DegreeView",
    "DeletionTrace",
    "Graph",
    "GraphError",
    "brute_feasible",
    "brute_fk",
    "components",
    "degree_view",
    "delete_vertices",
    "diff_upper_bound",
    "exact_f",
    "induced_subgraph",
    "is_forest",
    "make_certificate",
    "random_forest",
    "random_graph",
    "survivors",
    "verify_certificate",
]

__version__ = "0.1.0"
