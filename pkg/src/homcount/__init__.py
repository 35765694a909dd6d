"""Exact counts of homomorphisms from closed surface groups into finite groups."""

from __future__ import annotations

from .chartable import (CharacterTableModP, FSPartition, character_table_mod_p, choose_prime,
                        fs_partition, verify_character_identities)
from .errors import (CharTableError, GenfunError, GraphError, GroupError, HomcountError,
                     SurfaceError, WorkBoundExceeded)
from .fatgraph import (MobiusGraph, automorphism_count, build_mobius_graph, canonical_form,
                       connected_graphs, crosscap_graph, mu_gamma, standard_graph, surface_of_graph)
from .genfun import (ValenceProfile, coefficient, coefficient_character_side,
                     coefficient_group_side, graph_classes, verify_orbit_stabilizer)
from .groups import (ClassFunction, ConjugacyClassData, FiniteGroup, GroupSpec, build_group,
                     conjugacy_data, convolve, involution_count, parse_group_arg, preset)
from .surfaces import (SurfaceType, brute_force_class_function, brute_force_hom_count,
                       check_character_expansion, count_hom_formula, hom_class_function)
from .verify import verify_all

__version__ = "0.1.0"

__all__ = [
    "CharTableError", "CharacterTableModP", "ClassFunction", "ConjugacyClassData", "FSPartition",
    "FiniteGroup", "GenfunError", "GraphError", "GroupError", "GroupSpec", "HomcountError",
    "MobiusGraph", "SurfaceError", "SurfaceType", "ValenceProfile", "WorkBoundExceeded",
    "automorphism_count", "brute_force_class_function", "brute_force_hom_count", "build_group",
    "build_mobius_graph", "canonical_form", "character_table_mod_p", "check_character_expansion",
    "choose_prime", "coefficient", "coefficient_character_side", "coefficient_group_side",
    "conjugacy_data", "connected_graphs", "convolve", "count_hom_formula", "crosscap_graph",
    "fs_partition", "graph_classes", "hom_class_function", "involution_count", "mu_gamma",
    "parse_group_arg", "preset", "standard_graph", "surface_of_graph",
    "verify_all", "verify_character_identities", "verify_orbit_stabilizer",
]
