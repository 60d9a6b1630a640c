"""Published equilibrium tables for the Kerala fixture, used as golden values."""

from __future__ import annotations

from dataclasses import dataclass

from .allocation import AllocationPlan, solve
from .cost_model import AlphaWeights
from .game_core import StrategyProfile
from .scenario import Scenario, kerala

COST_TOL = 1e-3

P = StrategyProfile


@dataclass(frozen=True)
class ExpectedStation:
    equilibria: dict  # profile -> (cost_1, cost_2)
    selected: StrategyProfile
    method: str


@dataclass(frozen=True)
class Case:
    number: int
    alphas: AlphaWeights
    stations: dict  # station id -> ExpectedStation


CASES = {
    1: Case(1, AlphaWeights(0.05, 0.05, 0.9), {
        "RS1": ExpectedStation(
            {P(1, 7): (0.92601, 0.71131), P(2, 6): (0.68208, 0.68512), P(3, 5): (0.30006, 0.56369)},
            P(3, 5), "payoff-dominance"),
        "RS2": ExpectedStation(
            {P(5, 4): (0.62423, 0.3531), P(6, 3): (0.6694, 0.59476), P(7, 2): (0.61696, 0.74119)},
            P(5, 4), "risk-dominance-tournament"),
    }),
    2: Case(2, AlphaWeights(0.2, 0.05, 0.75), {
        "RS1": ExpectedStation({P(3, 5): (0.3072, 0.87798)}, P(3, 5), "unique"),
        "RS2": ExpectedStation(
            {P(5, 4): (0.98137, 0.4031), P(7, 2): (0.64911, 1.0448)},
            P(5, 4), "risk-dominance-tournament"),
    }),
    3: Case(3, AlphaWeights(0.1, 0.25, 0.65), {
        "RS1": ExpectedStation({P(3, 5): (0.3503, 1.3613)}, P(3, 5), "unique"),
        "RS2": ExpectedStation({P(5, 4): (1.6211, 0.57262)}, P(5, 4), "unique"),
    }),
}


def run_case(number: int, scenario: Scenario | None = None) -> AllocationPlan:
    case = CASES[number]
    scenario = scenario if scenario is not None else kerala()
    return solve(scenario.with_alphas(case.alphas))


def compare(number: int, plan: AllocationPlan, tol: float = COST_TOL) -> list[str]:
    """Differences between a plan and the published table; empty when they agree."""
    case = CASES[number]
    games = {g.station: g for g in plan.games}
    diffs = []
    for sid, want in case.stations.items():
        g = games.get(sid)
        if g is None:
            diffs.append(f"{sid}: no game was played")
            continue
        got = set(g.equilibria)
        if got != set(want.equilibria):
            diffs.append(
                f"{sid}: equilibria {sorted(map(str, got))} != expected {sorted(map(str, want.equilibria))}"
            )
        for prof, (w1, w2) in want.equilibria.items():
            if prof not in got:
                continue
            c1, c2 = g.costs(prof)
            if abs(c1 - w1) > tol or abs(c2 - w2) > tol:
                diffs.append(f"{sid} {prof}: costs ({c1:.5f}, {c2:.5f}) != expected ({w1}, {w2})")
        if g.selection.selected != want.selected:
            diffs.append(f"{sid}: selected {g.selection.selected} != expected {want.selected}")
        if g.selection.method != want.method:
            diffs.append(f"{sid}: method {g.selection.method} != expected {want.method}")
    return diffs
