"""Attacks on IEAL. None of the entry points take the secret key."""
from .brute_force import ExactMatchScorer, SmoothnessScorer, brute_force
from .cpa import cpa_full, cpa_recover_mask, cpa_recover_permutation, query_bound
from .cycle import cycle_attack, cycle_length, round_candidates
from .kpa import dictionary_stats, kpa
from .oracle import EncryptionOracle, make_oracle
from .report import AttackReport
from .timing import SimulatedTimer, TimingModel, calibrate_pixel_cost, collect_samples, timing_estimate

__all__ = [
    "AttackReport", "EncryptionOracle", "ExactMatchScorer", "SimulatedTimer", "SmoothnessScorer",
    "TimingModel", "brute_force", "calibrate_pixel_cost", "collect_samples", "cpa_full",
    "cpa_recover_mask", "cpa_recover_permutation", "cycle_attack", "cycle_length",
    "dictionary_stats", "kpa", "make_oracle", "query_bound", "round_candidates", "timing_estimate",
]
