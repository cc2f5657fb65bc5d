"""Exact tools for the (p,q)-extremal problem and q-wise Kneser hypergraphs."""

__version__ = "0.1.0"

from .constructions import (  # noqa: E402
    complete_plus_edge,
    phi,
    sarkaria_chi,
    split_family_member,
    split_hypergraph,
    theorem_threshold,
    tq_decompose,
)
from .extremal import (  # noqa: E402
    ExtremalResult,
    SearchBudget,
    extremal_number,
    extremal_oracle,
    find_cover_structure,
    verify_lemma_p3,
)
from .hypergraph import EdgeFamily, Hypergraph, VertexSet, enumerate_k_subsets, parse, serialize  # noqa: E402
from .kneser import (  # noqa: E402
    KneserSpec,
    alpha_kneser,
    build_kneser,
    chromatic_number_exact,
    corollary_chi_f,
    fractional_chromatic_lp,
    fractional_chromatic_transitive,
    independence_number,
    qwise_disjoint,
)
from .matching import BipartiteGraph, lemma3_check, max_matching  # noqa: E402
from .pqproperty import PQParams, Violation, find_violation, has_pq_property, is_bounded_degree_member  # noqa: E402
