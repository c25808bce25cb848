"""Odd automorphisms of cubic symmetric graphs."""

from .autsearch import are_isomorphic, automorphism_group
from .constructors import cayley_graph, generalized_petersen, lcf, load_corpus, named
from .graphcore import Graph, TreeShape, girth, is_bipartite
from .oddness import OddnessReport, cross_validate, detect_odd_direct, predict_odd
from .orbital import coset_action, is_orbital_odd, orbitals
from .permcore import Permutation, PermGroup, parity
from .rigid import orbit_type_profile, rigid_cells
from .symclass import TypeLabel, arc_regularity_level, stabilizer_structures, type_label

__all__ = [
    "Graph", "Permutation", "PermGroup", "TreeShape", "TypeLabel", "OddnessReport",
    "are_isomorphic", "automorphism_group", "cayley_graph", "generalized_petersen", "lcf",
    "load_corpus", "named", "girth", "is_bipartite", "cross_validate", "detect_odd_direct",
    "predict_odd", "coset_action", "is_orbital_odd", "orbitals", "parity", "orbit_type_profile",
    "rigid_cells", "arc_regularity_level", "stabilizer_structures", "type_label",
]
