"""Exact higher-dimensional chordality for finite simplicial complexes.

Resolution and decomposition k-chordality, Leray numbers, Stanley-Reisner
regularity via Hochster's formula, k-Dirac certificates and (homology)
k-cuts, over Q and prime fields.
"""

from .chains import (Chain, HomologyReport, betti, betti_numbers, boundary, complete_cycle,
                     cycle_basis, extended_link_map, is_cycle, join_chains, link_map, sign,
                     solve_boundary)
from .chordality import (BettiTable, ChordalityVerdict, PropagationReport, betti_table,
                         check_propagation, decompose_cycle, has_linear_resolution,
                         herzog_srinivasan_holds, is_cohen_macaulay, is_decomposition_chordal,
                         is_resolution_chordal, leray_number, regularity, resolve_cycle)
from .complexes import (RelativeComplex, SimplicialComplex, alexander_dual, build_complex,
                        clique_complex, cone, delete, extended_link, faces_of_dim, induced, join,
                        link, missing_faces, skeleton, star)
from .corpus import CorpusSpec, named_complex, random_complex, standard_corpus
from .cuts import (CutReport, FaceAdjacencyGraph, check_reverse_propagation,
                   extended_link_two_sided, face_adjacency_graph,
                   find_extended_link_minimal_cut, is_cut, is_homology_cut, minimal_cut)
from .dirac import DiracCertificate, dirac_search, is_k_dirac, replay
from .errors import (BudgetExceeded, ChainError, FaceError, HomchordError, NotApplicableError,
                     ParseError, ScanTooLargeError)
from .field import F2, F3, Q, Field
from .formats import dump_chain, dump_complex, parse_chain, parse_complex

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "HomologyReport",
    "betti",
    "betti_numbers",
    "boundary",
    "complete_cycle",
    "cycle_basis",
    "extended_link_map",
    "is_cycle",
    "join_chains",
    "link_map",
    "sign",
    "solve_boundary",
    "BettiTable",
    "ChordalityVerdict",
    "PropagationReport",
    "betti_table",
    "check_propagation",
    "decompose_cycle",
    "has_linear_resolution",
    "herzog_srinivasan_holds",
    "is_cohen_macaulay",
    "is_decomposition_chordal",
    "is_resolution_chordal",
    "leray_number",
    "regularity",
    "resolve_cycle",
    "RelativeComplex",
    "SimplicialComplex",
    "alexander_dual",
    "build_complex",
    "clique_complex",
    "cone",
    "delete",
    "extended_link",
    "faces_of_dim",
    "induced",
    "join",
    "link",
    "missing_faces",
    "skeleton",
    "star",
    "CorpusSpec",
    "named_complex",
    "random_complex",
    "standard_corpus",
    "CutReport",
    "FaceAdjacencyGraph",
    "check_reverse_propagation",
    "extended_link_two_sided",
    "face_adjacency_graph",
    "find_extended_link_minimal_cut",
    "is_cut",
    "is_homology_cut",
    "minimal_cut",
    "DiracCertificate",
    "dirac_search",
    "is_k_dirac",
    "replay",
    "BudgetExceeded",
    "ChainError",
    "FaceError",
    "HomchordError",
    "NotApplicableError",
    "ParseError",
    "ScanTooLargeError",
    "F2",
    "F3",
    "Q",
    "Field",
    "dump_chain",
    "dump_complex",
    "parse_chain",
    "parse_complex",
]
