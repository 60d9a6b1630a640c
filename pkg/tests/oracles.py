"""Reference implementations kept deliberately naive and independent of the package."""

from fractions import Fraction


def brute_force_psne(strategies_p1, strategies_p2, cost_p1, cost_p2, tol=1e-9):
    """Direct double loop over profiles and unilateral deviations."""
    found = []
    for i, d1 in enumerate(strategies_p1):
        for j, d2 in enumerate(strategies_p2):
            stable = True
            for k in range(len(strategies_p1)):
                if cost_p1[k][j] < cost_p1[i][j] - tol:
                    stable = False
            for k in range(len(strategies_p2)):
                if cost_p2[i][k] < cost_p2[i][j] - tol:
                    stable = False
            if stable:
                found.append((d1, d2))
    return sorted(found)


def penalty_exact(d_s, d_o, n_s, n_o, avail):
    """Mutual penalty in exact rational arithmetic, term by term."""
    d_s, d_o, n_s, n_o, avail = map(Fraction, (d_s, d_o, n_s, n_o, avail))
    f = avail - d_s - d_o if avail - d_s - d_o >= 0 else Fraction(0)
    g = d_s + d_o - avail if avail - d_s - d_o <= 0 else Fraction(0)
    term1 = f * (n_s - d_s) / n_s
    term2 = (n_s - d_s) / n_s
    term3 = (n_o - (avail - d_s)) / n_o
    term4 = Fraction(0)
    if g > 0:
        term4 = g * (d_s / n_s) / (d_s / n_s + d_o / n_o)
    return term1 + term2 + term3 + term4


def deviation_check(cost_p1, cost_p2, p, q, tol=1e-7):
    """Indifference/no-cheaper-deviation check for a mixed profile (p, q)."""
    m, n = len(p), len(q)
    row_costs = [sum(cost_p1[i][j] * q[j] for j in range(n)) for i in range(m)]
    col_costs = [sum(cost_p2[i][j] * p[i] for i in range(m)) for j in range(n)]
    problems = []
    for weights, costs, who in ((p, row_costs, 1), (q, col_costs, 2)):
        support = [c for w, c in zip(weights, costs) if w > 1e-9]
        lo, hi = min(support), max(support)
        if hi - lo > tol:
            problems.append(f"player {who} support costs spread {hi - lo}")
        if min(costs) < hi - tol:
            problems.append(f"player {who} has a cheaper off-support strategy")
    return problems
