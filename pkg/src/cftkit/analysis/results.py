"""Result records produced by the analysis operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CutSetReport:
    top: str
    cut_sets: tuple[tuple[str, ...], ...]  # each sorted; list by (size, lex)


def canonical_cut_sets(sets) -> tuple[tuple[str, ...], ...]:
    canon = {tuple(sorted(s)) for s in sets}
    return tuple(sorted(canon, key=lambda s: (len(s), s)))


@dataclass(frozen=True)
class ProbabilityResult:
    top: str
    exact: float
    rare_event_upper_bound: float | None = None


@dataclass(frozen=True)
class Witness:
    failed: tuple[str, ...]
    left: bool
    right: bool


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    witness: Witness | None = None
