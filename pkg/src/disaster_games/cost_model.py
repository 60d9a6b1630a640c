"""Cost of a demand level for a crisis location sharing one station with another.

A player's total cost mixes travel time (hours), fuel (kilolitres) and a
dimensionless mutual penalty, weighted by three alphas summing to one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .game_core import CostGame, GameError

ALPHA_TOL = 1e-9


class CostModelError(ValueError):
    pass


@dataclass(frozen=True)
class VehicleProfile:
    speed: float  # km/h
    fuel_rate: float  # kL/km

    def __post_init__(self):
        if not (self.speed > 0 and self.fuel_rate > 0):
            raise CostModelError("vehicle speed and fuel rate must be positive")


@dataclass(frozen=True)
class PlayerNeed:
    need: int
    dist_primary: float
    dist_backup: float

    def __post_init__(self):
        if self.need < 0:
            raise CostModelError("need must be non-negative")
        if not (self.dist_primary > 0 and self.dist_backup > 0):
            raise CostModelError("distances must be positive")


@dataclass(frozen=True)
class AlphaWeights:
    alpha_t: float
    alpha_c: float
    alpha_l: float

    def __post_init__(self):
        values = (self.alpha_t, self.alpha_c, self.alpha_l)
        if any(not math.isfinite(a) or a < 0 for a in values):
            raise CostModelError("alpha weights must be non-negative")
        if abs(sum(values) - 1.0) > ALPHA_TOL:
            raise CostModelError("alpha weights must sum to 1")

    @classmethod
    def parse(cls, text: str) -> "AlphaWeights":
        """Parse ``"T,C,L"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise CostModelError(f"expected three comma-separated alpha weights, got {text!r}")
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise CostModelError(f"alpha weights must be numbers, got {text!r}") from None
        return cls(*values)


@dataclass(frozen=True)
class StationContext:
    availability: int
    backup_availability: int = 0

    def __post_init__(self):
        if self.availability < 0 or self.backup_availability < 0:
            raise CostModelError("availability must be non-negative")


def requirement(area: float, criticality: float, per_area_need: float) -> int:
    """Units needed: area x criticality x units-per-area, rounded up."""
    if not (area > 0 and per_area_need > 0):
        raise CostModelError("area and per-area need must be positive")
    if not 0 < criticality <= 1:
        raise CostModelError("criticality must lie in (0, 1]")
    # guard against 1.0000000000000002 style products rounding up a whole unit
    return max(1, math.ceil(area * criticality * per_area_need - 1e-9))


def _check_demand(d: int, player: PlayerNeed) -> None:
    if not 0 <= d <= player.need:
        raise CostModelError(f"demand {d} outside [0, {player.need}]")


def response_time_cost(d: int, player: PlayerNeed, vehicle: VehicleProfile) -> float:
    """Arrival time of the farthest source used: backup whenever d < need."""
    _check_demand(d, player)
    if player.need == 0:
        return 0.0
    if d == player.need:
        return player.dist_primary / vehicle.speed
    return player.dist_backup / vehicle.speed


def fuel_cost(d: int, player: PlayerNeed, vehicle: VehicleProfile) -> float:
    """Fuel for ``d`` units from the primary station plus the rest from backup."""
    _check_demand(d, player)
    return (d * player.dist_primary + (player.need - d) * player.dist_backup) * vehicle.fuel_rate


def conflict_surplus(x, y, z):
    """Unused availability ``x - y - z``, or 0 when demand meets or exceeds it."""
    return x - y - z if x - y - z >= 0 else 0


def conflict_excess(x, y, z):
    """Over-demand ``y + z - x``, or 0 when availability covers demand."""
    return y + z - x if x - y - z <= 0 else 0


def mutual_penalty(
    d_self: int, d_other: int, player: PlayerNeed, other: PlayerNeed, station: StationContext
) -> float:
    if player.need <= 0 or other.need <= 0:
        raise CostModelError("players with zero need take no part in a game")
    _check_demand(d_self, player)
    _check_demand(d_other, other)
    n_s, n_o, avail = player.need, other.need, station.availability

    shortfall = (n_s - d_self) / n_s
    under_use = conflict_surplus(avail, d_self, d_other) * shortfall
    restriction = (n_o - (avail - d_self)) / n_o
    excess = conflict_excess(avail, d_self, d_other)
    conflict_share = 0.0
    if excess > 0:
        share_s = d_self / n_s
        conflict_share = excess * share_s / (share_s + d_other / n_o)
    return under_use + shortfall + restriction + conflict_share


def total_cost(
    d_self: int,
    d_other: int,
    player: PlayerNeed,
    other: PlayerNeed,
    station: StationContext,
    vehicle: VehicleProfile,
    alphas: AlphaWeights,
) -> float:
    return (
        alphas.alpha_t * response_time_cost(d_self, player, vehicle)
        + alphas.alpha_c * fuel_cost(d_self, player, vehicle)
        + alphas.alpha_l * mutual_penalty(d_self, d_other, player, other, station)
    )


def build_cost_game(
    p1: PlayerNeed,
    p2: PlayerNeed,
    station: StationContext,
    vehicle: VehicleProfile,
    alphas: AlphaWeights,
    labels: tuple[str, str] = ("P1", "P2"),
) -> CostGame:
    """Game over demands 0..min(need, availability) for both players."""
    if p1.need <= 0 or p2.need <= 0:
        raise GameError("both players need a positive requirement to play")
    s1 = range(min(p1.need, station.availability) + 1)
    s2 = range(min(p2.need, station.availability) + 1)
    c1 = np.empty((len(s1), len(s2)))
    c2 = np.empty_like(c1)
    for i in s1:
        for j in s2:
            c1[i, j] = total_cost(i, j, p1, p2, station, vehicle, alphas)
            c2[i, j] = total_cost(j, i, p2, p1, station, vehicle, alphas)
    return CostGame(tuple(s1), tuple(s2), c1, c2, labels)
