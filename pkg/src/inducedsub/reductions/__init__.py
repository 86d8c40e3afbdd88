"""3-SAT and DIDPP reductions, switches, the reachability condition and the classifier."""

from .base import GraphBuilder, ReductionOutput, graft
from .classify import Classification, classify_pattern
from .gadgets import build_G1, build_G2, build_G3, build_G4, build_G5
from .reachability import ReachabilityReport, check_reachability_condition
from .splices import (
    build_G1_prime,
    build_G1_star,
    build_G2_D,
    build_G2_k,
    build_G3_C,
    build_G3_L,
    build_G4_k,
    build_G4_prime,
    build_G5_star,
    compose_component,
    find_cycle_splice_arc,
    find_reachability_splice_arc,
    reduce_didpp_to_two_cycles,
)
from .switch import SwitchSpec, is_good_converse_switch, is_good_switch

__all__ = [
    "Classification", "GraphBuilder", "ReachabilityReport", "ReductionOutput", "SwitchSpec",
    "build_G1", "build_G1_prime", "build_G1_star", "build_G2", "build_G2_D", "build_G2_k",
    "build_G3", "build_G3_C", "build_G3_L", "build_G4", "build_G4_k", "build_G4_prime",
    "build_G5", "build_G5_star", "check_reachability_condition", "classify_pattern",
    "compose_component", "find_cycle_splice_arc", "find_reachability_splice_arc", "graft",
    "is_good_converse_switch", "is_good_switch", "reduce_didpp_to_two_cycles",
]

FAMILIES = ("G1", "G1star", "G1prime", "G2", "G2k", "G2D", "G3", "G3L", "G3C", "G4", "G4k", "G4prime", "G5", "G5star", "DIDPP2C", "Compose")
