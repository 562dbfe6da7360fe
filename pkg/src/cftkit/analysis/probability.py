"""Exact top-event probability via Shannon decomposition over the BDD.

Repeated events (one basic event feeding several gates) are handled
correctly: each variable is branched on once along any BDD path, so no
independence between subtrees is assumed.
"""

from __future__ import annotations

from ..errors import ModelError, NonCoherentTree
from ..tree import FaultTree
from .bdd import build_bdd
from .cutsets import minimal_cut_sets
from .results import ProbabilityResult


def top_event_probability(ft: FaultTree, top: str) -> ProbabilityResult:
    cone = ft.cone_events(top)
    probs: dict[str, float] = {}
    for e in cone:
        if e.probability is None:
            raise ModelError(
                f"missing probability on basic event {e.name!r}"
            )
        probs[e.name] = e.probability

    bdd = build_bdd(ft, top)
    exact = bdd.probability(probs)

    try:
        report = minimal_cut_sets(ft, top)
    except NonCoherentTree:
        bound = None
    else:
        bound = 0.0
        for cs in report.cut_sets:
            w = 1.0
            for name in cs:
                w *= probs[name]
            bound += w
    return ProbabilityResult(top, exact, bound)
