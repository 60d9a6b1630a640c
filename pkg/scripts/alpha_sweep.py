"""Sweep the weight simplex on the Kerala fixture.

For each (alpha_t, alpha_c, alpha_l) on a grid, record how many pure
equilibria each station's game has, which one is selected and how.
Writes CSV to stdout.
"""

import argparse
import csv
import logging
import sys

import numpy as np

from disaster_games import solve
from disaster_games.cost_model import AlphaWeights
from disaster_games.scenario import kerala


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--step", type=float, default=0.05)
    args = parser.parse_args(argv)
    # capacity fallbacks are reported in the method column
    logging.getLogger("disaster_games").setLevel(logging.ERROR)

    scenario = kerala()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["alpha_t", "alpha_c", "alpha_l", "station", "n_psne", "selected", "method", "shortfall"])
    grid = np.round(np.arange(0.0, 1.0 + 1e-9, args.step), 10)
    for t in grid:
        for c in grid:
            if t + c > 1.0 + 1e-9:
                continue
            alphas = AlphaWeights(float(t), float(c), float(max(0.0, 1.0 - t - c)))
            plan = solve(scenario.with_alphas(alphas))
            for g in plan.games:
                writer.writerow([f"{t:g}", f"{c:g}", f"{alphas.alpha_l:g}", g.station,
                                 len(g.equilibria), str(g.selection.selected),
                                 g.selection.method, plan.backup_shortfall])


if __name__ == "__main__":
    main()
