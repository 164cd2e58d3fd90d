"""Grouping-based suffix array construction (optimised GSACA)."""

from .errors import EmptyWord, InputContainsNul, InputTooLarge, SuffixArrayError, WidthTooSmall
from .lyndon import MarkedPss, compute_pss, derive_nss, mark_last_children
from .phase1 import LyndonGrouping, run_phase1
from .phase2 import run_phase2_bfs, run_phase2_reference
from .pipeline import AllocationTracker, RunStats, suffix_array, suffix_array_with_stats, verify_suffix_array
from .text import APPEND_SENTINEL, REMAP, IndexWidth, Text, choose_width, make_text

__all__ = [
    "APPEND_SENTINEL",
    "REMAP",
    "AllocationTracker",
    "EmptyWord",
    "IndexWidth",
    "InputContainsNul",
    "InputTooLarge",
    "LyndonGrouping",
    "MarkedPss",
    "RunStats",
    "SuffixArrayError",
    "Text",
    "WidthTooSmall",
    "choose_width",
    "compute_pss",
    "derive_nss",
    "make_text",
    "mark_last_children",
    "run_phase1",
    "run_phase2_bfs",
    "run_phase2_reference",
    "suffix_array",
    "suffix_array_with_stats",
    "verify_suffix_array",
]
