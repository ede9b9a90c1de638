"""Exact rational simplex for the packing LP behind Newton-polyhedron membership.

The only problem solved here is

    maximize  sum(lam)   subject to   sum_i lam_i * v_i <= a,   lam >= 0

with non-negative integer data.  Because ``a >= 0`` the all-slack basis is
feasible, so no phase one is needed.  Every quantity is a
:class:`fractions.Fraction`; there is no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class Unbounded(Exception):
    pass


def max_total_weight(
    vectors: Sequence[Sequence[int]],
    bound: Sequence[int],
    stop_at: Fraction | int | None = None,
) -> Fraction:
    """Optimal value of the packing LP above.

    If ``stop_at`` is given the search returns as soon as the objective reaches
    it; the returned value is then only a lower bound that is ``>= stop_at``.
    Raises :class:`Unbounded` if some vector is identically zero.
    """
    g = len(vectors)
    d = len(bound)
    if any(b < 0 for b in bound):
        raise ValueError("right-hand side must be non-negative")
    if any(not any(v) for v in vectors):
        raise Unbounded("zero generator")

    ncols = g + d
    # row j: coefficients of lam_1..lam_g, slack_1..slack_d, then rhs
    rows = [
        [Fraction(vectors[i][j]) for i in range(g)]
        + [Fraction(int(k == j)) for k in range(d)]
        + [Fraction(bound[j])]
        for j in range(d)
    ]
    # reduced costs for a maximization: c_j - z_j, start with c = (1..1, 0..0)
    cost = [Fraction(1)] * g + [Fraction(0)] * d
    basis = list(range(g, g + d))
    value = Fraction(0)

    while True:
        if stop_at is not None and value >= stop_at:
            return value
        # Bland: lowest-index improving column, lowest-index basic var on ties
        col = next((j for j in range(ncols) if cost[j] > 0), None)
        if col is None:
            return value
        best = None
        for r, row in enumerate(rows):
            if row[col] > 0:
                ratio = row[-1] / row[col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise Unbounded("column without positive entries")
        r = best[1]
        pivot_row = rows[r]
        piv = pivot_row[col]
        if piv != 1:
            rows[r] = pivot_row = [x / piv for x in pivot_row]
        for k, row in enumerate(rows):
            f = row[col]
            if k != r and f:
                rows[k] = [x - f * y for x, y in zip(row, pivot_row)]
        f = cost[col]
        value += f * pivot_row[-1]
        cost = [c - f * y for c, y in zip(cost, pivot_row[:-1])]
        basis[r] = col
