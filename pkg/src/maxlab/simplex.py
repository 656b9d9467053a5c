"""Exact rational feasibility solver for small equality-form linear programs.

Phase-1 simplex over `fractions.Fraction` with Bland's rule, so there is no
rounding and no cycling. Solves  A x = b, x >= 0  and returns either a
feasible x or a Farkas certificate y with  yt A <= 0  and  yt b > 0, i.e. an
exact proof that no solution exists. Built for the tiny systems arising from
convex-combination queries (tens of rows/columns).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["solve_feasibility", "convex_combination"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def solve_feasibility(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[list[Fraction] | None, list[Fraction] | None]:
    """Return (x, None) with A x = b, x >= 0, or (None, y) with yt A <= 0 < yt b."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    for row in rows:
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")

    # Sign-normalize so the artificial basis starts feasible.
    flipped = [False] * m
    tab: list[list[Fraction]] = []
    b: list[Fraction] = []
    for i in range(m):
        if rhs[i] < 0:
            flipped[i] = True
            tab.append([-v for v in rows[i]] + [_ONE if k == i else _ZERO for k in range(m)])
            b.append(-rhs[i])
        else:
            tab.append(list(rows[i]) + [_ONE if k == i else _ZERO for k in range(m)])
            b.append(Fraction(rhs[i]))

    # Reduced costs for minimizing the artificial total, artificial basis B = I:
    # original column j gets -colsum(j), artificial columns get 0.
    cost = [-sum((tab[i][j] for i in range(m)), _ZERO) for j in range(n)] + [_ZERO] * m
    obj = sum(b, _ZERO)
    basis = [n + i for i in range(m)]
    total = n + m

    while True:
        enter = -1
        for j in range(total):  # Bland: smallest improving index
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best_ratio: Fraction | None = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = b[i] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise AssertionError("phase-1 objective cannot be unbounded")
        piv = tab[leave][enter]
        if piv != 1:
            inv = 1 / piv
            tab[leave] = [v * inv for v in tab[leave]]
            b[leave] *= inv
        pivot_row = tab[leave]
        pivot_rhs = b[leave]
        for i in range(m):
            if i == leave:
                continue
            factor = tab[i][enter]
            if factor:
                row_i = tab[i]
                tab[i] = [a - factor * p for a, p in zip(row_i, pivot_row)]
                b[i] -= factor * pivot_rhs
        factor = cost[enter]
        if factor:
            cost = [a - factor * p for a, p in zip(cost, pivot_row)]
            obj += factor * pivot_rhs
        basis[leave] = enter

    if obj == 0:
        x = [_ZERO] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = b[i]
        return x, None

    # Farkas vector from the artificial reduced costs: cost[n+i] = 1 - y_i.
    y = [_ONE - cost[n + i] for i in range(m)]
    for i in range(m):
        if flipped[i]:
            y[i] = -y[i]
    return None, y


def convex_combination(
    points: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> tuple[list[Fraction] | None, tuple[list[Fraction], Fraction] | None]:
    """Express target as a convex combination of the given points, exactly.

    Returns (coefficients, None) with coefficients >= 0 summing to 1, or
    (None, (g, t)) with  g . p + t <= 0  for every point p  and
    g . target + t > 0: a hyperplane separating the target from the hull.
    """
    if not points:
        raise ValueError("need at least one point")
    dim = len(target)
    for p in points:
        if len(p) != dim:
            raise ValueError("point dimension does not match target")
    rows = [[Fraction(p[d]) for p in points] for d in range(dim)]
    rows.append([_ONE] * len(points))
    rhs = [Fraction(v) for v in target] + [_ONE]
    x, y = solve_feasibility(rows, rhs)
    if x is not None:
        return x, None
    assert y is not None
    return None, (y[:dim], y[dim])
