"""Detection of induced subdivisions in directed graphs."""

from .digraph import Digraph, disjoint_union, is_oriented, skeleton, subdivide
from .oracle import oracle_find_subdivision, search_subdivision
from .patterns import Detection, PatternSpec, detect, parse_pattern
from .witness import Witness, verify_witness, witness_problems

__version__ = "0.1.0"

__all__ = [
    "Detection",
    "Digraph",
    "PatternSpec",
    "Witness",
    "detect",
    "disjoint_union",
    "is_oriented",
    "oracle_find_subdivision",
    "parse_pattern",
    "search_subdivision",
    "skeleton",
    "subdivide",
    "verify_witness",
    "witness_problems",
]
