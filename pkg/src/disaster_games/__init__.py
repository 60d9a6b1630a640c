"""Disaster-response resource allocation as two-player cost games."""

from .allocation import AllocationPlan, Draw, report, residual_scenario, solve
from .cost_model import (
    AlphaWeights,
    PlayerNeed,
    StationContext,
    VehicleProfile,
    build_cost_game,
    requirement,
    total_cost,
)
from .game_core import (
    CostGame,
    MixedProfile,
    StrategyProfile,
    expected_cost,
    find_msne,
    find_psne,
    is_psne,
)
from .scenario import Scenario, contention_groups, kerala, load, sorted_stations, validate
from .selection import payoff_dominant, restrict_2x2, risk_dominant, select_equilibrium

__all__ = [
    "AllocationPlan", "AlphaWeights", "CostGame", "Draw", "MixedProfile", "PlayerNeed",
    "Scenario", "StationContext", "StrategyProfile", "VehicleProfile", "build_cost_game",
    "contention_groups", "expected_cost", "find_msne", "find_psne", "is_psne", "kerala",
    "load", "payoff_dominant", "report", "requirement", "residual_scenario",
    "restrict_2x2", "risk_dominant", "select_equilibrium", "solve", "sorted_stations",
    "total_cost", "validate",
]
