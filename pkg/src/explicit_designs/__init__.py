"""Explicit (n, r, s)-systems with small independence number."""

from .constructions import ap_system, build_rs_system, capacity, decompose_s, five_four, trim
from .hypergraph import DesignParams, Hypergraph, is_independent, product, shadow, verify_design

__all__ = [
    "DesignParams",
    "Hypergraph",
    "ap_system",
    "build_rs_system",
    "capacity",
    "decompose_s",
    "five_four",
    "is_independent",
    "product",
    "shadow",
    "trim",
    "verify_design",
]
