"""Finite two-player strategic-form cost games.

Players minimise cost. Strategies are integer demand levels; the cost of a
profile is looked up by the *index* of each demand in its strategy list.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import linprog

logger = logging.getLogger(__name__)

DEVIATION_TOL = 1e-9
PROB_TOL = 1e-9


class GameError(ValueError):
    """Raised for malformed games or profiles."""


class InvalidProfileError(GameError):
    pass


class StrategyProfile(NamedTuple):
    d1: int
    d2: int

    def __str__(self) -> str:
        return f"({self.d1}, {self.d2})"


def _frozen(matrix) -> np.ndarray:
    arr = np.array(matrix, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class CostGame:
    """A bimatrix game in cost form.

    ``cost_p1[i, j]`` and ``cost_p2[i, j]`` are the costs paid by each player
    when player 1 demands ``strategies_p1[i]`` and player 2 demands
    ``strategies_p2[j]``.
    """

    strategies_p1: tuple[int, ...]
    strategies_p2: tuple[int, ...]
    cost_p1: np.ndarray
    cost_p2: np.ndarray
    labels: tuple[str, str] = ("P1", "P2")

    def __post_init__(self):
        s1 = tuple(int(s) for s in self.strategies_p1)
        s2 = tuple(int(s) for s in self.strategies_p2)
        c1 = _frozen(self.cost_p1)
        c2 = _frozen(self.cost_p2)
        object.__setattr__(self, "strategies_p1", s1)
        object.__setattr__(self, "strategies_p2", s2)
        object.__setattr__(self, "cost_p1", c1)
        object.__setattr__(self, "cost_p2", c2)
        object.__setattr__(self, "labels", tuple(self.labels))

        for name, strategies in (("strategies_p1", s1), ("strategies_p2", s2)):
            if not strategies:
                raise GameError(f"{name} is empty")
            if len(set(strategies)) != len(strategies):
                raise GameError(f"{name} contains repeated demand levels")
        shape = (len(s1), len(s2))
        if c1.shape != shape or c2.shape != shape:
            raise GameError(
                f"cost matrices have shapes {c1.shape}, {c2.shape}; expected {shape}"
            )
        if not (np.all(np.isfinite(c1)) and np.all(np.isfinite(c2))):
            raise GameError("cost entries must be finite")
        if len(self.labels) != 2:
            raise GameError("a two-player game needs exactly two labels")

    @property
    def shape(self) -> tuple[int, int]:
        return self.cost_p1.shape

    def index_of(self, profile: StrategyProfile) -> tuple[int, int]:
        try:
            return self.strategies_p1.index(profile[0]), self.strategies_p2.index(profile[1])
        except ValueError:
            raise InvalidProfileError(f"profile {tuple(profile)} is not a profile of this game") from None

    def costs(self, profile: StrategyProfile) -> tuple[float, float]:
        i, j = self.index_of(profile)
        return float(self.cost_p1[i, j]), float(self.cost_p2[i, j])

    def profiles(self):
        for d1, d2 in itertools.product(self.strategies_p1, self.strategies_p2):
            yield StrategyProfile(d1, d2)

    def transformed(self, scale: float, shift: float = 0.0) -> "CostGame":
        """Apply the same positive affine map to both cost matrices."""
        if scale <= 0:
            raise GameError("scale must be positive")
        return CostGame(
            self.strategies_p1,
            self.strategies_p2,
            scale * self.cost_p1 + shift,
            scale * self.cost_p2 + shift,
            self.labels,
        )


@dataclass(frozen=True)
class MixedProfile:
    """Probability vectors over each player's strategy list.

    ``degenerate`` is set when the equilibrium was taken as a representative
    of a continuum on its support.
    """

    p1_weights: np.ndarray
    p2_weights: np.ndarray
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        w1 = _frozen(self.p1_weights)
        w2 = _frozen(self.p2_weights)
        for w in (w1, w2):
            if w.ndim != 1 or w.size == 0:
                raise GameError("weights must be non-empty vectors")
            if np.any(w < -PROB_TOL) or abs(w.sum() - 1.0) > PROB_TOL:
                raise GameError(f"weights {w} are not a probability vector")
        object.__setattr__(self, "p1_weights", w1)
        object.__setattr__(self, "p2_weights", w2)

    @classmethod
    def pure(cls, game: CostGame, profile: StrategyProfile) -> "MixedProfile":
        i, j = game.index_of(profile)
        w1 = np.zeros(len(game.strategies_p1))
        w2 = np.zeros(len(game.strategies_p2))
        w1[i] = w2[j] = 1.0
        return cls(w1, w2)

    @property
    def support_p1(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(self.p1_weights > PROB_TOL))

    @property
    def support_p2(self) -> tuple[int, ...]:
        return tuple(np.flatnonzero(self.p2_weights > PROB_TOL))

    def is_pure(self) -> bool:
        return len(self.support_p1) == 1 and len(self.support_p2) == 1

    def most_probable(self, game: CostGame) -> StrategyProfile:
        # np.argmax returns the first maximum, i.e. the lowest demand on ties
        # when strategies are listed in increasing order.
        return StrategyProfile(
            game.strategies_p1[int(np.argmax(self.p1_weights))],
            game.strategies_p2[int(np.argmax(self.p2_weights))],
        )

    def same_as(self, other: "MixedProfile", atol: float = 1e-7) -> bool:
        return (
            self.p1_weights.shape == other.p1_weights.shape
            and self.p2_weights.shape == other.p2_weights.shape
            and np.allclose(self.p1_weights, other.p1_weights, atol=atol)
            and np.allclose(self.p2_weights, other.p2_weights, atol=atol)
        )


def is_psne(game: CostGame, profile: StrategyProfile) -> bool:
    """True iff no unilateral deviation lowers the deviator's cost by more than 1e-9."""
    i, j = game.index_of(profile)
    if np.any(game.cost_p1[:, j] < game.cost_p1[i, j] - DEVIATION_TOL):
        return False
    if np.any(game.cost_p2[i, :] < game.cost_p2[i, j] - DEVIATION_TOL):
        return False
    return True


def find_psne(game: CostGame) -> list[StrategyProfile]:
    """All pure Nash equilibria, sorted by (d1, d2)."""
    best1 = game.cost_p1.min(axis=0, keepdims=True)
    best2 = game.cost_p2.min(axis=1, keepdims=True)
    mask = (game.cost_p1 <= best1 + DEVIATION_TOL) & (game.cost_p2 <= best2 + DEVIATION_TOL)
    found = [
        StrategyProfile(game.strategies_p1[i], game.strategies_p2[j])
        for i, j in zip(*np.nonzero(mask))
    ]
    return sorted(found)


def expected_cost(game: CostGame, mixed: MixedProfile, player: int) -> float:
    """Expected cost of ``player`` (1 or 2) under independent mixing."""
    if mixed.p1_weights.shape != (game.shape[0],) or mixed.p2_weights.shape != (game.shape[1],):
        raise GameError(
            f"mixed profile dimensions {mixed.p1_weights.shape}x{mixed.p2_weights.shape} "
            f"do not match game {game.shape}"
        )
    if player == 1:
        matrix = game.cost_p1
    elif player == 2:
        matrix = game.cost_p2
    else:
        raise GameError(f"player must be 1 or 2, got {player}")
    return float(mixed.p1_weights @ matrix @ mixed.p2_weights)


def _never_best(costs: np.ndarray, own: Sequence[int], mix: Sequence[int], tol: float) -> bool:
    """True if some row of ``own`` is beaten by another row on every column of ``mix``.

    Such a row is never a best response to a mix on ``mix``, so the support
    pair can be discarded without solving anything.
    """
    block = costs[:, list(mix)]
    for i in own:
        if np.any(np.all(block < block[i] - tol, axis=1)):
            return True
    return False


def _support_mix(
    costs: np.ndarray, own: Sequence[int], mix: Sequence[int], tol: float
) -> tuple[np.ndarray | None, bool]:
    """Find opponent weights on ``mix`` that make every ``own`` row equally cheap.

    ``costs`` is the deciding player's cost matrix with its own strategies on
    the rows. Returns ``(weights, degenerate)``; weights are None when no
    valid mix exists. Off-support rows must cost at least the supported value
    and every weight on ``mix`` must be strictly positive.
    """
    own = list(own)
    mix = list(mix)
    k = len(mix)
    sub = costs[np.ix_(own, mix)]
    # Unknowns: q (k weights) and v (common cost).
    a_eq = np.zeros((len(own) + 1, k + 1))
    a_eq[: len(own), :k] = sub
    a_eq[: len(own), k] = -1.0
    a_eq[len(own), :k] = 1.0
    b_eq = np.zeros(len(own) + 1)
    b_eq[-1] = 1.0

    rank = np.linalg.matrix_rank(a_eq)
    off = [r for r in range(costs.shape[0]) if r not in set(own)]
    if rank == k + 1:
        sol, *_ = np.linalg.lstsq(a_eq, b_eq, rcond=None)
        if not np.allclose(a_eq @ sol, b_eq, atol=1e-10):
            return None, False
        q, v = sol[:k], sol[k]
        if np.any(q <= PROB_TOL):
            return None, False
        if off and np.any(costs[np.ix_(off, mix)] @ q < v - tol):
            return None, False
        return q, False

    # Continuum of candidate mixes: pick the one whose smallest weight is
    # largest, so that a strictly positive representative is found if any exists.
    # Variables: q (k), v, t. Maximise t subject to q_j >= t.
    n = k + 2
    c = np.zeros(n)
    c[-1] = -1.0
    a_eq_lp = np.hstack([a_eq, np.zeros((a_eq.shape[0], 1))])
    a_ub = [np.concatenate([-np.eye(k)[r], [0.0, 1.0]]) for r in range(k)]
    b_ub = [0.0] * k
    for r in off:
        # v - costs[r, mix] @ q <= tol
        a_ub.append(np.concatenate([-costs[r, mix], [1.0, 0.0]]))
        b_ub.append(tol)
    bounds = [(0, 1)] * k + [(None, None), (None, 1)]
    res = linprog(c, A_ub=np.array(a_ub), b_ub=np.array(b_ub), A_eq=a_eq_lp, b_eq=b_eq,
                  bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] <= PROB_TOL:
        return None, False
    q = np.clip(res.x[:k], 0.0, None)
    return q / q.sum(), True


def find_msne(game: CostGame, tol: float = 1e-9) -> list[MixedProfile]:
    """Mixed Nash equilibria by support enumeration.

    Support pairs are visited in increasing total support size, then
    lexicographically. Each returned profile has exactly the enumerated
    support. Supports admitting a continuum of equilibria contribute one
    representative flagged ``degenerate``.
    """
    m, n = game.shape
    # Player 1's mix must make player 2 indifferent: player 2's own strategies
    # are the columns, so pass the transposed matrix.
    c1 = game.cost_p1
    c2t = game.cost_p2.T
    pairs = [
        (s1, s2)
        for k1 in range(1, m + 1)
        for k2 in range(1, n + 1)
        for s1 in itertools.combinations(range(m), k1)
        for s2 in itertools.combinations(range(n), k2)
    ]
    pairs.sort(key=lambda p: (len(p[0]) + len(p[1]), p))

    found: list[MixedProfile] = []
    for s1, s2 in pairs:
        if _never_best(c1, s1, s2, tol) or _never_best(c2t, s2, s1, tol):
            continue
        q, deg2 = _support_mix(c1, s1, s2, tol)
        if q is None:
            continue
        p, deg1 = _support_mix(c2t, s2, s1, tol)
        if p is None:
            continue
        w1 = np.zeros(m)
        w2 = np.zeros(n)
        w1[list(s1)] = p
        w2[list(s2)] = q
        candidate = MixedProfile(w1 / w1.sum(), w2 / w2.sum(), degenerate=deg1 or deg2)
        if any(candidate.same_as(f) for f in found):
            continue
        logger.debug("equilibrium on supports %s x %s", s1, s2)
        found.append(candidate)

    if not found:
        raise GameError("support enumeration found no equilibrium in a finite game")
    return found


# the name used by the allocation engine and the public API
find_msne_2x2_plus = find_msne


def is_degenerate(equilibria: Sequence[MixedProfile]) -> bool:
    return any(e.degenerate for e in equilibria)
