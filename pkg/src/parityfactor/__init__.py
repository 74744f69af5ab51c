"""Existence and construction of (g,f)-parity factors of simple graphs."""

from .conditions import (
    HypothesisReport,
    build_apex_extremal,
    build_bipartite_extremal,
    check_li_cai,
    check_main,
    check_nishimura,
    check_odd_lemma,
)
from .finder import FactorOutcome, find_parity_factor, verify_factor
from .graph import Graph, build_graph, generate
from .matching import has_perfect_matching, maximum_matching
from .oracle import Certificate, ParitySpec, certificate_search, eta

__all__ = [
    "Certificate",
    "FactorOutcome",
    "Graph",
    "HypothesisReport",
    "ParitySpec",
    "build_apex_extremal",
    "build_bipartite_extremal",
    "build_graph",
    "certificate_search",
    "check_li_cai",
    "check_main",
    "check_nishimura",
    "check_odd_lemma",
    "eta",
    "find_parity_factor",
    "generate",
    "has_perfect_matching",
    "maximum_matching",
    "verify_factor",
]
