"""Random instance generators shared by the property tests."""

import numpy as np

from disaster_games import AlphaWeights, kerala, CostGame, PlayerNeed, StationContext, VehicleProfile, build_cost_game
from disaster_games.cases import CASES
from disaster_games.scenario import CrisisLocation, ResourceStation, Scenario

VEHICLE = VehicleProfile(210.0, 0.0025)


def random_alphas(rng):
    w = rng.dirichlet(np.ones(3))
    w[2] = 1.0 - w[0] - w[1]
    return AlphaWeights(*w)


def random_model_game(rng, max_need=8, max_capacity=16):
    n1, n2 = rng.integers(1, max_need + 1, size=2)
    avail = int(rng.integers(0, max_capacity + 1))
    p1 = PlayerNeed(int(n1), float(rng.uniform(20, 300)), float(rng.uniform(300, 900)))
    p2 = PlayerNeed(int(n2), float(rng.uniform(20, 300)), float(rng.uniform(300, 900)))
    return build_cost_game(p1, p2, StationContext(avail, 6), VEHICLE, random_alphas(rng))


def random_integer_game(rng, max_size=5, low=-5, high=6):
    m, n = rng.integers(1, max_size + 1, size=2)
    c1 = rng.integers(low, high, size=(m, n))
    c2 = rng.integers(low, high, size=(m, n))
    return CostGame(tuple(range(m)), tuple(range(n)), c1, c2)


def random_scenario(rng, feasible=True, max_need=10, max_capacity=20):
    """One to three primary stations, each nearest to at most two locations."""
    n_primary = int(rng.integers(1, 4))
    primary_ids = [f"S{k}" for k in range(n_primary)]
    locations = []
    for sid in primary_ids:
        for _ in range(int(rng.integers(0, 3))):
            lid = f"L{len(locations)}"
            near = float(rng.uniform(20, 200))
            dists = {other: near + float(rng.uniform(5, 300)) for other in primary_ids if other != sid}
            dists[sid] = near
            dists["B"] = float(rng.uniform(100, 900))
            need = int(rng.integers(0, max_need + 1))
            locations.append(CrisisLocation(lid, 400.0 * max(need, 1), 1.0, 0.0025, dists, need=need))
    stations = [ResourceStation(sid, int(rng.integers(0, max_capacity + 1))) for sid in primary_ids]
    total = sum(loc.need for loc in locations)
    backup_cap = total if feasible else int(rng.integers(0, max_capacity + 1))
    stations.append(ResourceStation("B", backup_cap, "backup"))
    return Scenario(tuple(locations), tuple(stations), VEHICLE, random_alphas(rng))


def kerala_game(station: str, case: int):
    """Cost game played at RS1 (P1 vs P2) or RS2 (P3 vs P4) under a published case."""
    scen = kerala()
    pair = {"RS1": ("P1", "P2"), "RS2": ("P3", "P4")}[station]
    locs = {loc.id: loc for loc in scen.locations}
    players = [PlayerNeed(locs[p].need, locs[p].distances[station], locs[p].distances["RS3"]) for p in pair]
    ctx = StationContext(scen.station(station).capacity, scen.backup.capacity)
    return build_cost_game(*players, ctx, scen.vehicle, CASES[case].alphas, pair)
