"""Picking one pure equilibrium out of several.

Payoff dominance is tried first. Failing that, every pair of equilibria is
compared on its 2x2 restriction by Nash products (products of the two
players' unilateral deviation losses) and the profile with the most pairwise
wins is selected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .game_core import DEVIATION_TOL, CostGame, GameError, StrategyProfile, is_psne

METHODS = (
    "unique",
    "payoff-dominance",
    "risk-dominance-tournament",
    "total-cost-tiebreak",
    "lexicographic-tiebreak",
    "mixed-realization",
)


class SelectionError(GameError):
    pass


class NoEquilibriumError(SelectionError):
    """Selection was asked to choose from an empty set."""


class RestrictionError(SelectionError):
    """The two equilibria share a strategy, so no 2x2 restriction exists."""


@dataclass(frozen=True)
class DominanceVerdict:
    pair: tuple[StrategyProfile, StrategyProfile]
    payoff_dominant: Optional[StrategyProfile]
    risk_dominant: Optional[StrategyProfile]
    nash_product_first: float
    nash_product_second: float


@dataclass(frozen=True)
class SelectionResult:
    selected: StrategyProfile
    method: str
    verdicts: tuple[DominanceVerdict, ...] = ()
    # pairs sharing a coordinate, for which no risk comparison is defined
    skipped_pairs: tuple[tuple[StrategyProfile, StrategyProfile], ...] = ()
    wins: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.method not in METHODS:
            raise SelectionError(f"unknown selection method {self.method!r}")


def _dominates(a: tuple[float, float], b: tuple[float, float]) -> bool:
    no_worse = all(x <= y + DEVIATION_TOL for x, y in zip(a, b))
    better = any(x < y - DEVIATION_TOL for x, y in zip(a, b))
    return no_worse and better


def payoff_dominant(game: CostGame, equilibria: Sequence[StrategyProfile]) -> Optional[StrategyProfile]:
    """The equilibrium that is weakly cheaper for both players than every other,
    strictly for at least one player in each comparison; None if there is none."""
    if not equilibria:
        raise NoEquilibriumError("no equilibria to compare")
    equilibria = [StrategyProfile(*e) for e in equilibria]
    if len(equilibria) == 1:
        return equilibria[0]
    costs = {e: game.costs(e) for e in equilibria}
    for e in equilibria:
        if all(_dominates(costs[e], costs[o]) for o in equilibria if o != e):
            return e
    return None


def restrict_2x2(game: CostGame, e1: StrategyProfile, e2: StrategyProfile) -> CostGame:
    """The subgame on both equilibria's strategies, with ``e1`` on the
    first row and column and ``e2`` on the second."""
    e1, e2 = StrategyProfile(*e1), StrategyProfile(*e2)
    if e1 == e2:
        raise RestrictionError(f"cannot restrict to a single profile {e1}")
    if e1.d1 == e2.d1 or e1.d2 == e2.d2:
        raise RestrictionError(f"{e1} and {e2} share a strategy; restriction is not 2x2")
    rows = [game.index_of(e1)[0], game.index_of(e2)[0]]
    cols = [game.index_of(e1)[1], game.index_of(e2)[1]]
    return CostGame(
        (e1.d1, e2.d1),
        (e1.d2, e2.d2),
        game.cost_p1[rows][:, cols],
        game.cost_p2[rows][:, cols],
        game.labels,
    )


def nash_products(sub: CostGame) -> tuple[float, float]:
    """Nash products of the two diagonal cells of a 2x2 cost game.

    With row costs [[A, C], [B, D]] and column costs [[a, b], [c, d]] these
    are (A - B)(a - b) and (D - C)(d - c).
    """
    if sub.shape != (2, 2):
        raise SelectionError(f"expected a 2x2 game, got {sub.shape}")
    (A, C), (B, D) = sub.cost_p1
    (a, b), (c, d) = sub.cost_p2
    return float((A - B) * (a - b)), float((D - C) * (d - c))


def risk_dominant(sub: CostGame) -> Optional[StrategyProfile]:
    first = StrategyProfile(sub.strategies_p1[0], sub.strategies_p2[0])
    second = StrategyProfile(sub.strategies_p1[1], sub.strategies_p2[1])
    if not (is_psne(sub, first) and is_psne(sub, second)):
        raise SelectionError("risk dominance needs both diagonal profiles to be equilibria")
    np1, np2 = nash_products(sub)
    if abs(np1 - np2) <= DEVIATION_TOL:
        return None
    return first if np1 > np2 else second


def compare_pair(game: CostGame, e1: StrategyProfile, e2: StrategyProfile) -> DominanceVerdict:
    sub = restrict_2x2(game, e1, e2)
    np1, np2 = nash_products(sub)
    return DominanceVerdict(
        pair=(e1, e2),
        payoff_dominant=payoff_dominant(game, [e1, e2]),
        risk_dominant=risk_dominant(sub),
        nash_product_first=np1,
        nash_product_second=np2,
    )


def select_equilibrium(game: CostGame, equilibria: Sequence[StrategyProfile]) -> SelectionResult:
    if not equilibria:
        raise NoEquilibriumError("no pure equilibrium to select from")
    equilibria = sorted(set(StrategyProfile(*e) for e in equilibria))
    if len(equilibria) == 1:
        return SelectionResult(equilibria[0], "unique")

    verdicts = []
    skipped = []
    for e1, e2 in itertools.combinations(equilibria, 2):
        try:
            verdicts.append(compare_pair(game, e1, e2))
        except RestrictionError:
            skipped.append((e1, e2))

    best = payoff_dominant(game, equilibria)
    if best is not None:
        return SelectionResult(best, "payoff-dominance", tuple(verdicts), tuple(skipped))

    wins = {e: 0 for e in equilibria}
    for v in verdicts:
        if v.risk_dominant is not None:
            wins[v.risk_dominant] += 1
    top = max(wins.values())
    leaders = [e for e in equilibria if wins[e] == top]
    method = "risk-dominance-tournament"
    if len(leaders) > 1:
        method = "total-cost-tiebreak"
        sums = {e: sum(game.costs(e)) for e in leaders}
        low = min(sums.values())
        leaders = [e for e in leaders if sums[e] <= low + DEVIATION_TOL]
        if len(leaders) > 1:
            method = "lexicographic-tiebreak"
    return SelectionResult(leaders[0], method, tuple(verdicts), tuple(skipped), wins)
