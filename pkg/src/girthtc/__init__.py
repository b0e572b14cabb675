"""Construct, transform and verify total colorings of regular graphs of small girth."""
from .coloring import (CycleClass, TotalColoring, VerificationReport, classify_cycle, orthogonal,
                       verify_egc, verify_etc, verify_etgc, verify_tc, verify_vegc)
from .graph import Cycle, Graph, canonical_form, enumerate_cycles, girth

__version__ = "0.1.0"

__all__ = [
    "Cycle", "CycleClass", "Graph", "TotalColoring", "VerificationReport", "canonical_form",
    "classify_cycle", "enumerate_cycles", "girth", "orthogonal", "verify_egc", "verify_etc",
    "verify_etgc", "verify_tc", "verify_vegc",
]
