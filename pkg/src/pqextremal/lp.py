"""Exact covering LP: minimise the total weight on sets so every element is covered at least once.

Solved with a dual simplex in ``fractions.Fraction`` arithmetic. Costs are all
1, so the all-surplus basis is dual feasible from the start and no phase one
is needed. Bland-style smallest-index choices on both the leaving row and the
entering column rule out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class LPError(RuntimeError):
    pass


@dataclass(frozen=True)
class CoveringSolution:
    value: Fraction
    weights: tuple[Fraction, ...]  # one per set
    duals: tuple[Fraction, ...]  # one per element; a fractional packing certificate
    pivots: int


def solve_covering_lp(num_elements: int, sets: list[int], max_pivots: int = 100_000) -> CoveringSolution:
    """Minimise ``sum f_S`` subject to ``sum_{S ∋ v} f_S >= 1`` for each element, ``f >= 0``.

    ``sets`` are bitmasks over elements ``0..num_elements-1``. The returned
    duals satisfy ``sum_{v in S} y_v <= 1`` for each set and sum to the same
    value, which certifies optimality.
    """
    m = len(sets)
    rows = num_elements
    if rows == 0:
        return CoveringSolution(Fraction(0), (Fraction(0),) * m, (), 0)
    for v in range(rows):
        if not any(s >> v & 1 for s in sets):
            raise LPError(f"element {v} lies in no set; the covering LP is infeasible")

    zero, one = Fraction(0), Fraction(1)
    width = m + rows
    # rows are the negated covering constraints: -sum f + s_v = -1
    tab = []
    for v in range(rows):
        row = [zero] * width
        for j, s in enumerate(sets):
            if s >> v & 1:
                row[j] = -one
        row[m + v] = one
        tab.append(row)
    rhs = [-one] * rows
    cost = [one] * m + [zero] * rows
    obj = zero  # minus the current objective value
    basis = [m + v for v in range(rows)]

    pivots = 0
    while True:
        leave = None
        for i in range(rows):
            if rhs[i] < 0 and (leave is None or basis[i] < basis[leave]):
                leave = i
        if leave is None:
            break
        row = tab[leave]
        enter = None
        best = None
        for j in range(width):
            a = row[j]
            if a < 0:
                ratio = cost[j] / -a
                if best is None or ratio < best:
                    best, enter = ratio, j
        if enter is None:
            raise LPError("covering LP is infeasible")
        pivots += 1
        if pivots > max_pivots:
            raise LPError(f"no optimum after {max_pivots} pivots")

        piv = row[enter]
        row = [a / piv for a in row]
        tab[leave] = row
        rhs[leave] /= piv
        for i in range(rows):
            if i == leave:
                continue
            f = tab[i][enter]
            if f:
                r_i = tab[i]
                tab[i] = [a - f * b for a, b in zip(r_i, row)]
                rhs[i] -= f * rhs[leave]
        f = cost[enter]
        if f:
            cost = [a - f * b for a, b in zip(cost, row)]
            obj -= f * rhs[leave]
        basis[leave] = enter

    weights = [zero] * m
    for i, j in enumerate(basis):
        if j < m:
            weights[j] = rhs[i]
    duals = tuple(cost[m + v] for v in range(rows))
    return CoveringSolution(-obj, tuple(weights), duals, pivots)


def check_certificate(num_elements: int, sets: list[int], sol: CoveringSolution) -> bool:
    """Independent exact re-check of primal feasibility, dual feasibility and equal values."""
    if len(sol.weights) != len(sets) or len(sol.duals) != num_elements:
        return False
    if any(w < 0 for w in sol.weights) or any(y < 0 for y in sol.duals):
        return False
    for v in range(num_elements):
        if sum((w for w, s in zip(sol.weights, sets) if s >> v & 1), Fraction(0)) < 1:
            return False
    for s in sets:
        if sum((y for v, y in enumerate(sol.duals) if s >> v & 1), Fraction(0)) > 1:
            return False
    return sum(sol.weights, Fraction(0)) == sol.value == sum(sol.duals, Fraction(0))
