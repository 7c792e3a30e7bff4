"""Two-phase primal simplex over exact rationals with Bland's rule.

Problems are given in the form

    maximize    c . x
    subject to  A_eq x == b_eq
                A_ub x <= b_ub
                x >= 0

All inputs are converted to :class:`fractions.Fraction`; nothing is rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[tuple] = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of lists of Fraction
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        p = row[col]
        if p != 1:
            inv = 1 / p
            self.rows[r] = row = [v * inv for v in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def reduced_costs(self, cost):
        # cost_j - c_B . column_j, for a maximization objective
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                red = [rj - cb * aij for rj, aij in zip(red, row)]
        return red

    def run(self, cost, allowed) -> str:
        """Maximize ``cost`` over the current basis; Bland's rule throughout."""
        while True:
            red = self.reduced_costs(cost)
            enter = next((j for j in range(len(cost)) if allowed[j] and red[j] > 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (best is None or ratio < best
                            or (ratio == best and self.basis[i] < self.basis[leave])):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self.pivot(leave, enter)


def _frac_matrix(a):
    return [[Fraction(v) for v in row] for row in (a or [])]


def solve(c: Sequence, A_ub=None, b_ub=None, A_eq=None, b_eq=None) -> LPResult:
    """Solve the LP exactly. ``c`` may be all zeros for a pure feasibility test."""
    n = len(c)
    A_ub, A_eq = _frac_matrix(A_ub), _frac_matrix(A_eq)
    b_ub = [Fraction(v) for v in (b_ub or [])]
    b_eq = [Fraction(v) for v in (b_eq or [])]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    for row in A_ub + A_eq:
        if len(row) != n:
            raise ValueError("constraint row has wrong length")

    m_ub, m = len(A_ub), len(A_ub) + len(A_eq)
    n_slack = m_ub
    width = n + n_slack + m  # structural | slack | artificial
    rows, rhs = [], []
    for i, (row, b) in enumerate(zip(A_ub + A_eq, b_ub + b_eq)):
        full = row + [Fraction(0)] * (n_slack + m)
        if i < m_ub:
            full[n + i] = Fraction(1)
        if b < 0:
            full = [-v for v in full]
            b = -b
        full[n + n_slack + i] = Fraction(1)
        rows.append(full)
        rhs.append(b)

    tab = _Tableau(rows, rhs, [n + n_slack + i for i in range(m)])
    art = range(n + n_slack, width)

    # phase 1: maximize -(sum of artificials)
    phase1 = [Fraction(0)] * width
    for j in art:
        phase1[j] = Fraction(-1)
    tab.run(phase1, [True] * width)
    if any(tab.rhs[i] > 0 for i, b in enumerate(tab.basis) if b >= n + n_slack):
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis; drop redundant rows
    for i in reversed(range(len(tab.basis))):
        if tab.basis[i] < n + n_slack:
            continue
        col = next((j for j in range(n + n_slack) if tab.rows[i][j] != 0), None)
        if col is None:
            del tab.rows[i], tab.rhs[i], tab.basis[i]
        else:
            tab.pivot(i, col)

    cost = [Fraction(v) for v in c] + [Fraction(0)] * (n_slack + m)
    allowed = [j < n + n_slack for j in range(width)]
    status = tab.run(cost, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        x[b] = tab.rhs[i]
    value = sum((cv * xv for cv, xv in zip(cost, x)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x[:n]))


def feasible(A_ub=None, b_ub=None, A_eq=None, b_eq=None, n: Optional[int] = None) -> bool:
    """True iff ``{x >= 0 : A_ub x <= b_ub, A_eq x == b_eq}`` is nonempty."""
    if n is None:
        n = len((A_ub or A_eq)[0])
    return solve([0] * n, A_ub, b_ub, A_eq, b_eq).status != INFEASIBLE
