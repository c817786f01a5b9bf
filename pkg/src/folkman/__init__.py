"""Constrained graph generation and Ramsey-arrowing toolkit.

Generates H-free, semi-polycirculant and locally linear graph families,
decides vertex and edge arrowing, and maintains a registry of Folkman
number bounds with verifiable witness graphs.
"""

from .arrowing import ArrowSpec, arrows_vertex, brute_force_arrows
from .canon import CanonicalForm, canon_key, canonical_form
from .constructions import (ExtensionTask, circulant, cone, k_extensions,
                            minimize_witness, polarity_graph_64)
from .genfree import GenFilter, generate_free_graphs, is_maximal_free
from .graph6 import decode_graph6, decode_sparse6, encode_graph6
from .graphs import Coloring, Graph, triangles
from .invariants import chromatic_number, independence_number
from .locallinear import LLTask, generate_ll, is_locally_linear, is_mll
from .numbers import ClassicalParams, classical_value, composite_bounds, is_ramsey_graph
from .patterns import Pattern, contains_pattern
from .polycirculant import (BlockStructure, EdgeClass, GenTask,
                            enumerate_block_edge_classes,
                            generate_semipolycirculant)
from .sat import CnfFormula, arrows_edge_33, encode_cnf_33, to_dimacs
from .search import FolkmanQuery, search_folkman
from .theorem import check_minimal_cop2p3_properties, min_degree_lower_bound

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
