"""Turn a scenario into an allocation plan.

Each contested primary station is settled by a two-player cost game; the
backup station then covers whatever the selected demands leave unmet.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field, replace
from typing import Optional

from .cost_model import AlphaWeights, PlayerNeed, StationContext, build_cost_game
from .game_core import CostGame, MixedProfile, StrategyProfile, expected_cost, find_msne, find_psne
from .scenario import Scenario, contention_groups, validate
from .selection import SelectionResult, select_equilibrium

logger = logging.getLogger(__name__)

FORMATS = ("table", "csv", "json-lines")


@dataclass(frozen=True)
class Draw:
    location: str
    station: str
    units: int


@dataclass(frozen=True)
class StationGame:
    """Everything decided at one contested station."""

    station: str
    availability: int
    players: tuple[str, str]
    game: CostGame = field(repr=False)
    equilibria: tuple[StrategyProfile, ...]
    selection: SelectionResult
    mixed: Optional[MixedProfile] = None
    note: str = ""

    def costs(self, profile: StrategyProfile) -> tuple[float, float]:
        return self.game.costs(profile)


@dataclass(frozen=True)
class AllocationPlan:
    draws: tuple[Draw, ...]
    per_player_cost: dict
    selection: dict
    backup_shortfall: int
    feasible: bool
    alphas: Optional[AlphaWeights] = None
    games: tuple[StationGame, ...] = ()

    def drawn(self, location: str) -> int:
        return sum(d.units for d in self.draws if d.location == location)

    def station_load(self, station: str) -> int:
        return sum(d.units for d in self.draws if d.station == station)

    def units(self, location: str, station: str) -> int:
        return sum(d.units for d in self.draws if d.location == location and d.station == station)


def _settle_pair(game: CostGame, availability: int) -> tuple[SelectionResult, tuple, Optional[MixedProfile], str]:
    equilibria = find_psne(game)
    mixed = None
    note = ""
    if equilibria:
        result = select_equilibrium(game, equilibria)
    else:
        candidates = find_msne(game)
        mixed = min(
            candidates,
            key=lambda m: expected_cost(game, m, 1) + expected_cost(game, m, 2),
        )
        result = SelectionResult(mixed.most_probable(game), "mixed-realization")
        note = "no pure equilibrium; most probable cell of the cheapest mixed equilibrium"

    chosen = result.selected
    if chosen.d1 + chosen.d2 > availability:
        feasible = [p for p in game.profiles() if p.d1 + p.d2 <= availability]
        fallback = min(feasible, key=lambda p: (sum(game.costs(p)), p))
        note = (
            f"selected {chosen} exceeds {availability} available units; "
            f"replaced by cheapest feasible profile {fallback}"
        )
        result = SelectionResult(
            fallback, "total-cost-tiebreak", result.verdicts, result.skipped_pairs, result.wins
        )
    return result, tuple(equilibria), mixed, note


def solve(scenario) -> AllocationPlan:
    scenario = validate(scenario)
    backup = scenario.backup
    groups = contention_groups(scenario)

    draws: list[Draw] = []
    costs: dict[str, float] = {}
    selections: dict[str, SelectionResult] = {}
    games: list[StationGame] = []
    deficits: list[tuple[str, int]] = []

    for group in groups:
        station = group.station
        primary: dict[str, int] = {}
        if not group.contested:
            primary = {loc.id: need for loc, need in group.players}
        elif len(group.players) == 1:
            (loc, need), = group.players
            primary = {loc.id: min(need, station.capacity)}
        else:
            (loc1, n1), (loc2, n2) = group.players
            ctx = StationContext(station.capacity, backup.capacity)
            p1 = PlayerNeed(n1, loc1.distances[station.id], loc1.distances[backup.id])
            p2 = PlayerNeed(n2, loc2.distances[station.id], loc2.distances[backup.id])
            game = build_cost_game(p1, p2, ctx, scenario.vehicle, scenario.alphas, (loc1.id, loc2.id))
            result, equilibria, mixed, note = _settle_pair(game, station.capacity)
            logger.info("%s: equilibria %s, selected %s by %s", station.id,
                        [str(e) for e in equilibria], result.selected, result.method)
            if note:
                logger.warning("%s: %s", station.id, note)
            primary = {loc1.id: result.selected.d1, loc2.id: result.selected.d2}
            costs[loc1.id], costs[loc2.id] = game.costs(result.selected)
            selections[station.id] = result
            games.append(StationGame(station.id, station.capacity, (loc1.id, loc2.id), game,
                                     equilibria, result, mixed, note))

        for loc, need in group.players:
            if primary[loc.id] > 0:
                draws.append(Draw(loc.id, station.id, primary[loc.id]))
        by_need = sorted(group.players, key=lambda p: -p[1])  # stable: ties keep scenario order
        deficits.extend((loc.id, need - primary[loc.id]) for loc, need in by_need)

    remaining = backup.capacity
    shortfall = 0
    for loc_id, deficit in deficits:
        if deficit <= 0:
            continue
        units = min(deficit, remaining)
        remaining -= units
        shortfall += deficit - units
        if units > 0:
            draws.append(Draw(loc_id, backup.id, units))

    return AllocationPlan(
        draws=tuple(draws),
        per_player_cost=costs,
        selection=selections,
        backup_shortfall=shortfall,
        feasible=shortfall == 0,
        alphas=scenario.alphas,
        games=tuple(games),
    )


def residual_scenario(scenario: Scenario, plan: AllocationPlan) -> Scenario:
    """Capacities net of the plan's draws and needs reduced to what is still unmet."""
    stations = tuple(replace(s, capacity=s.capacity - plan.station_load(s.id)) for s in scenario.stations)
    locations = tuple(replace(loc, need=max(0, loc.need - plan.drawn(loc.id))) for loc in scenario.locations)
    return replace(scenario, stations=stations, locations=locations)


def _fmt_profile(p: StrategyProfile) -> str:
    return f"({p.d1}, {p.d2})"


def _fmt_costs(c: tuple[float, float]) -> str:
    return f"({c[0]:.5f}, {c[1]:.5f})"


def _records(plan: AllocationPlan):
    for g in plan.games:
        for eq in g.equilibria:
            c1, c2 = g.costs(eq)
            yield {
                "record": "equilibrium",
                "station": g.station,
                "players": f"{g.players[0]}/{g.players[1]}",
                "profile": _fmt_profile(eq),
                "cost_1": round(c1, 5),
                "cost_2": round(c2, 5),
                "selected": eq == g.selection.selected,
                "method": g.selection.method if eq == g.selection.selected else "",
            }
        if g.selection.selected not in g.equilibria:
            c1, c2 = g.costs(g.selection.selected)
            yield {
                "record": "equilibrium",
                "station": g.station,
                "players": f"{g.players[0]}/{g.players[1]}",
                "profile": _fmt_profile(g.selection.selected),
                "cost_1": round(c1, 5),
                "cost_2": round(c2, 5),
                "selected": True,
                "method": g.selection.method,
            }
    for d in plan.draws:
        yield {"record": "draw", "station": d.station, "location": d.location, "units": d.units}
    if plan.draws or plan.games:
        yield {"record": "summary", "backup_shortfall": plan.backup_shortfall, "feasible": plan.feasible}


CSV_FIELDS = ("record", "station", "players", "location", "units", "profile",
              "cost_1", "cost_2", "selected", "method", "backup_shortfall", "feasible")


def _table(plan: AllocationPlan) -> str:
    lines = ["Allocation plan"]
    if plan.alphas is not None and (plan.games or plan.draws):
        a = plan.alphas
        lines.append(f"alphas: time={a.alpha_t:g} fuel={a.alpha_c:g} penalty={a.alpha_l:g}")
    for g in plan.games:
        p1, p2 = g.players
        head = f"NE at {g.station}"
        rows = [(_fmt_profile(e), _fmt_costs(g.costs(e)), e) for e in g.equilibria]
        if g.selection.selected not in g.equilibria:
            e = g.selection.selected
            rows.append((_fmt_profile(e), _fmt_costs(g.costs(e)), e))
        lines.append("")
        lines.append(f"{g.station}: {p1} vs {p2}, {g.availability} units available")
        lines.append(f"{head} | Costs on {p1} and {p2}")
        for prof, cost, e in rows:
            mark = f"  <- selected ({g.selection.method})" if e == g.selection.selected else ""
            lines.append(f"{prof} | {cost}{mark}")
        if not g.equilibria:
            lines.append("(no pure equilibrium)")
        if g.mixed is not None:
            w1 = ", ".join(f"{d}:{w:.5f}" for d, w in zip(g.game.strategies_p1, g.mixed.p1_weights) if w > 1e-9)
            w2 = ", ".join(f"{d}:{w:.5f}" for d, w in zip(g.game.strategies_p2, g.mixed.p2_weights) if w > 1e-9)
            lines.append(f"mixed equilibrium {p1} [{w1}] {p2} [{w2}]")
        if g.note:
            lines.append(f"note: {g.note}")
    if plan.draws:
        lines.append("")
        lines.append("Location | Station | Units")
        for d in plan.draws:
            lines.append(f"{d.location} | {d.station} | {d.units}")
    if plan.draws or plan.games:
        lines.append("")
        lines.append(f"backup shortfall: {plan.backup_shortfall}")
        lines.append(f"feasible: {'yes' if plan.feasible else 'no'}")
    return "\n".join(lines) + "\n"


def report(plan: AllocationPlan, format: str = "table") -> str:
    if format == "table":
        return _table(plan)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rec in _records(plan):
            writer.writerow(rec)
        return buf.getvalue()
    if format == "json-lines":
        return "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in _records(plan))
    raise ValueError(f"unknown report format {format!r}; choose from {', '.join(FORMATS)}")
