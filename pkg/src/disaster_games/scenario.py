"""Scenario documents: crisis locations, resource stations, vehicle, weights.

A scenario document is a JSON-compatible mapping::

    {
      "locations": [{"id", "area_sqkm", "criticality", "per_area_need",
                     "distances_km": {station_id: km}}],
      "stations":  [{"id", "capacity", "role": "primary" | "backup"}],
      "vehicle":   {"speed_kmph", "fuel_rate_kl_per_km"},
      "alphas":    {"time", "fuel", "penalty"}
    }

``validate`` collects every violation before raising, so a user sees all
problems with a document at once.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from importlib import resources
from numbers import Real
from pathlib import Path
from typing import Any, Mapping, Optional

from .cost_model import ALPHA_TOL, AlphaWeights, VehicleProfile, requirement

PRIMARY = "primary"
BACKUP = "backup"
ROLES = (PRIMARY, BACKUP)


class ScenarioError(ValueError):
    """One or more validation failures; ``violations`` holds (path, message)."""

    def __init__(self, violations: list[tuple[str, str]]):
        self.violations = list(violations)
        super().__init__("; ".join(f"{p}: {m}" if p else m for p, m in self.violations))


class UnsupportedArityError(ValueError):
    pass


@dataclass(frozen=True)
class CrisisLocation:
    id: str
    area: float
    criticality: float
    per_area_need: float
    distances: Mapping[str, float]
    need: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "distances", dict(self.distances))
        if self.need < 0:
            object.__setattr__(
                self, "need", requirement(self.area, self.criticality, self.per_area_need)
            )

    def __hash__(self):
        return hash((self.id, self.need))


@dataclass(frozen=True)
class ResourceStation:
    id: str
    capacity: int
    role: str = PRIMARY

    @property
    def is_backup(self) -> bool:
        return self.role == BACKUP


@dataclass(frozen=True)
class Scenario:
    locations: tuple[CrisisLocation, ...]
    stations: tuple[ResourceStation, ...]
    vehicle: VehicleProfile
    alphas: AlphaWeights

    @property
    def backup(self) -> ResourceStation:
        return next(s for s in self.stations if s.is_backup)

    @property
    def primary_stations(self) -> tuple[ResourceStation, ...]:
        return tuple(s for s in self.stations if not s.is_backup)

    def station(self, station_id: str) -> ResourceStation:
        for s in self.stations:
            if s.id == station_id:
                return s
        raise KeyError(station_id)

    def with_alphas(self, alphas: AlphaWeights) -> "Scenario":
        return replace(self, alphas=alphas)

    def to_document(self) -> dict:
        """Inverse of ``validate``; needs are re-derived on load."""
        return {
            "locations": [
                {
                    "id": loc.id,
                    "area_sqkm": loc.area,
                    "criticality": loc.criticality,
                    "per_area_need": loc.per_area_need,
                    "distances_km": dict(loc.distances),
                }
                for loc in self.locations
            ],
            "stations": [
                {"id": s.id, "capacity": s.capacity, "role": s.role} for s in self.stations
            ],
            "vehicle": {
                "speed_kmph": self.vehicle.speed,
                "fuel_rate_kl_per_km": self.vehicle.fuel_rate,
            },
            "alphas": {
                "time": self.alphas.alpha_t,
                "fuel": self.alphas.alpha_c,
                "penalty": self.alphas.alpha_l,
            },
        }


@dataclass(frozen=True)
class ContentionGroup:
    station: ResourceStation
    players: tuple[tuple[CrisisLocation, int], ...]

    @property
    def total_demand(self) -> int:
        return sum(need for _, need in self.players)

    @property
    def contested(self) -> bool:
        return self.total_demand > self.station.capacity


def _is_number(value: Any) -> bool:
    return isinstance(value, Real) and not isinstance(value, bool) and math.isfinite(value)


def _is_int(value: Any) -> bool:
    return _is_number(value) and float(value).is_integer()


class _Checker:
    def __init__(self):
        self.violations: list[tuple[str, str]] = []

    def fail(self, path: str, message: str) -> None:
        self.violations.append((path, message))

    def mapping(self, doc: Any, key: str, path: str) -> Optional[Mapping]:
        value = doc.get(key) if isinstance(doc, Mapping) else None
        if not isinstance(value, Mapping):
            self.fail(path, "missing or not a mapping")
            return None
        return value

    def number(self, doc: Mapping, key: str, path: str, positive: bool = True) -> Optional[float]:
        value = doc.get(key)
        if not _is_number(value):
            self.fail(path, "missing or not a finite number")
            return None
        if positive and value <= 0:
            self.fail(path, "must be positive")
            return None
        return float(value)


def validate(doc: Any) -> Scenario:
    """Turn a raw document into a :class:`Scenario` or raise :class:`ScenarioError`."""
    if isinstance(doc, Scenario):
        return doc
    chk = _Checker()
    if not isinstance(doc, Mapping):
        raise ScenarioError([("", "scenario document must be a mapping")])

    stations: list[ResourceStation] = []
    raw_stations = doc.get("stations")
    if not isinstance(raw_stations, list) or not raw_stations:
        chk.fail("stations", "missing or empty list")
        raw_stations = []
    for k, raw in enumerate(raw_stations):
        path = f"stations[{k}]"
        if not isinstance(raw, Mapping):
            chk.fail(path, "not a mapping")
            continue
        sid = raw.get("id")
        if not isinstance(sid, str) or not sid:
            chk.fail(f"{path}.id", "missing or not a string")
            continue
        cap = raw.get("capacity")
        if not _is_int(cap) or cap < 0:
            chk.fail(f"{path}.capacity", "must be a non-negative integer")
            continue
        role = raw.get("role", PRIMARY)
        if role not in ROLES:
            chk.fail(f"{path}.role", f"must be one of {ROLES}")
            continue
        stations.append(ResourceStation(sid, int(cap), role))

    ids = [s.id for s in stations]
    for sid in sorted({i for i in ids if ids.count(i) > 1}):
        chk.fail("stations", f"duplicate station id {sid!r}")
    n_backup = sum(s.is_backup for s in stations)
    if stations and n_backup != 1:
        chk.fail("stations", f"exactly one backup station required, found {n_backup}")
    if stations and n_backup == len(stations):
        chk.fail("stations", "at least one primary station required")

    locations: list[CrisisLocation] = []
    raw_locations = doc.get("locations")
    if not isinstance(raw_locations, list):
        chk.fail("locations", "missing or not a list")
        raw_locations = []
    for k, raw in enumerate(raw_locations):
        path = f"locations[{k}]"
        if not isinstance(raw, Mapping):
            chk.fail(path, "not a mapping")
            continue
        lid = raw.get("id")
        if not isinstance(lid, str) or not lid:
            chk.fail(f"{path}.id", "missing or not a string")
        area = chk.number(raw, "area_sqkm", f"{path}.area_sqkm")
        crit = chk.number(raw, "criticality", f"{path}.criticality")
        if crit is not None and crit > 1:
            chk.fail(f"{path}.criticality", "must lie in (0, 1]")
            crit = None
        per_area = chk.number(raw, "per_area_need", f"{path}.per_area_need")
        dists = chk.mapping(raw, "distances_km", f"{path}.distances_km")
        clean: dict[str, float] = {}
        if dists is not None:
            for sid, km in dists.items():
                if sid not in ids:
                    chk.fail(f"{path}.distances_km.{sid}", "unknown station")
                elif not _is_number(km) or km <= 0:
                    chk.fail(f"{path}.distances_km.{sid}", "must be a positive number")
                else:
                    clean[sid] = float(km)
            for sid in ids:
                if sid not in dists:
                    chk.fail(f"{path}.distances_km.{sid}", f"missing distance from {lid} to {sid}")
        if None in (area, crit, per_area) or not isinstance(lid, str) or not lid:
            continue
        locations.append(CrisisLocation(lid, area, crit, per_area, clean))

    lids = [loc.id for loc in locations]
    for lid in sorted({i for i in lids if lids.count(i) > 1}):
        chk.fail("locations", f"duplicate location id {lid!r}")
    if set(lids) & set(ids):
        chk.fail("locations", "location ids must differ from station ids")

    vehicle = None
    raw_vehicle = chk.mapping(doc, "vehicle", "vehicle")
    if raw_vehicle is not None:
        speed = chk.number(raw_vehicle, "speed_kmph", "vehicle.speed_kmph")
        rate = chk.number(raw_vehicle, "fuel_rate_kl_per_km", "vehicle.fuel_rate_kl_per_km")
        if speed is not None and rate is not None:
            vehicle = VehicleProfile(speed, rate)

    alphas = None
    raw_alphas = chk.mapping(doc, "alphas", "alphas")
    if raw_alphas is not None:
        vals = [
            chk.number(raw_alphas, key, f"alphas.{key}", positive=False)
            for key in ("time", "fuel", "penalty")
        ]
        if None not in vals:
            if any(v < 0 for v in vals):
                chk.fail("alphas", "alpha weights must be non-negative")
            elif abs(sum(vals) - 1.0) > ALPHA_TOL:
                chk.fail("alphas", "alpha weights must sum to 1")
            else:
                alphas = AlphaWeights(*vals)

    if chk.violations:
        raise ScenarioError(chk.violations)
    return Scenario(tuple(locations), tuple(stations), vehicle, alphas)


def load(path) -> Scenario:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise ScenarioError([("", f"cannot read {path}: {exc.strerror or exc}")]) from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError([("", f"{path} is not valid JSON: {exc}")]) from exc
    return validate(doc)


def kerala_document() -> dict:
    """The bundled four-district, three-station flood fixture."""
    text = resources.files("disaster_games").joinpath("data/kerala.json").read_text()
    return json.loads(text)


def kerala() -> Scenario:
    return validate(kerala_document())


def sorted_stations(loc: CrisisLocation, stations) -> list[ResourceStation]:
    """Primary stations nearest first (ties by id), backup always last."""
    primaries = sorted(
        (s for s in stations if not s.is_backup), key=lambda s: (loc.distances[s.id], s.id)
    )
    return primaries + [s for s in stations if s.is_backup]


def contention_groups(scenario: Scenario) -> list[ContentionGroup]:
    """Positive-need locations grouped under their nearest primary station.

    Groups follow the scenario's station order; players keep scenario order.
    """
    members: dict[str, list[tuple[CrisisLocation, int]]] = {
        s.id: [] for s in scenario.primary_stations
    }
    for loc in scenario.locations:
        if loc.need <= 0:
            continue
        nearest = sorted_stations(loc, scenario.stations)[0]
        members[nearest.id].append((loc, loc.need))
    groups = []
    for station in scenario.primary_stations:
        players = members[station.id]
        if not players:
            continue
        if len(players) > 2:
            names = ", ".join(loc.id for loc, _ in players)
            raise UnsupportedArityError(
                f"{len(players)} locations ({names}) share station {station.id}; "
                "the cost model is defined for at most two"
            )
        groups.append(ContentionGroup(station, tuple(players)))
    return groups
