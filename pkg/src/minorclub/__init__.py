"""Exact clique-minor and bounded-diameter-minor algorithms on structured
graph classes, certified by brute-force oracles on small graphs."""

from .errors import (CapacityError, DomainError, FormatError,
                     InvalidStructureError, MethodError, MinorclubError,
                     ParseError)
from .graph import (Graph, chordality, complement, components, contract_edge,
                    contract_edges, diameter, disjoint_union, distances,
                    induced_subgraph, is_connected, join, max_clique,
                    clique_number)
from .formats import emit_graph, parse_graph
from .witness import WitnessStructure, verify_witness
from .recognition import (Certificate, Cotree, StrongOrdering,
                          diameter_dominating_pair, is_at_free,
                          is_chordal_bipartite, is_cobipartite, is_split,
                          recognize_cograph, strong_ordering, verify_ordering)
from .oracle import (clique_matching_oracle, connected_partitions,
                     hadwiger_oracle, max_s_club_minor_oracle,
                     min_club_contraction_oracle, nice_structure_oracle)
from .cograph_dp import CrTable, cr_join, cr_leaf, cr_union, hadwiger_cograph
from .bipperm_dp import hadwiger_bipperm, max_clique_matching
from .club_contraction import (distance_profile, find_satisfying_path,
                               is_satisfying_path, max_s_club_minor_atfree,
                               min_club_contraction_atfree,
                               s_club_contract_decide)
from .reductions import (HittingSetInstance, NaeFormula, ReductionInstance,
                         hitting_set_solve, hitting_set_to_chordal,
                         hitting_set_to_split, nae3sat_solve,
                         nae3sat_to_cobipartite, pendant_lift, subdivide_edges)

__all__ = [name for name in dir() if not name.startswith("_")]
