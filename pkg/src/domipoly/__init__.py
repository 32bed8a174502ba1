"""Domination polynomials of graphs, with k-tree families and root location.

The exhaustive oracle in :mod:`domipoly.oracle` is ground truth; the closed
forms and recurrences in :mod:`domipoly.recurrences` are checked against it
by :mod:`domipoly.checks`, and :mod:`domipoly.roots` finds complex roots.
"""

from .checks import CheckReport, METHOD_TAGS, compute, run_grid
from .errors import (
    CapacityError,
    ConvergenceError,
    DomipolyError,
    GraphFormatError,
    InvalidScriptError,
    InvalidVertexError,
    SpecDomainError,
    UndefinedDegreeError,
)
from .families import FamilySpec, generate, parse_spec, verify_k_tree
from .graph import Graph, closed_neighborhood, contract_vertex, corona, delete_vertices, join
from .oracle import domination_polynomial, restricted_count_pu
from .polynomial import Polynomial
from .roots import RootSet, find_roots

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CheckReport",
    "ConvergenceError",
    "DomipolyError",
    "FamilySpec",
    "Graph",
    "GraphFormatError",
    "InvalidScriptError",
    "InvalidVertexError",
    "METHOD_TAGS",
    "Polynomial",
    "RootSet",
    "SpecDomainError",
    "UndefinedDegreeError",
    "closed_neighborhood",
    "compute",
    "contract_vertex",
    "corona",
    "delete_vertices",
    "domination_polynomial",
    "find_roots",
    "generate",
    "join",
    "parse_spec",
    "restricted_count_pu",
    "run_grid",
    "verify_k_tree",
]
