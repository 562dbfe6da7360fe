"""Boolean-function analysis of flattened fault trees."""

from .bdd import BDD, BddManager, build_bdd, default_order
from .cutsets import minimal_cut_sets
from .equivalence import check_equivalence
from .oracle import (
    brute_force_cut_sets,
    brute_force_probability,
    truth_table,
)
from .probability import top_event_probability
from .results import (
    CutSetReport,
    EquivalenceVerdict,
    ProbabilityResult,
    Witness,
    canonical_cut_sets,
)

__all__ = [
    "BDD",
    "BddManager",
    "build_bdd",
    "default_order",
    "minimal_cut_sets",
    "check_equivalence",
    "brute_force_cut_sets",
    "brute_force_probability",
    "truth_table",
    "top_event_probability",
    "CutSetReport",
    "EquivalenceVerdict",
    "ProbabilityResult",
    "Witness",
    "canonical_cut_sets",
]
