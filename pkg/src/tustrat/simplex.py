"""Exact rational simplex method with Bland's anti-cycling rule.

Solves ``min c.x  s.t.  A x = b, x >= 0`` over :class:`~fractions.Fraction`.
The tableau carries an identity block next to ``A`` (the phase-one
artificials); after the solve those columns hold ``B^-1`` and their reduced
costs give the simplex multipliers, so optimal duals come for free.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    objective: Fraction | None = None
    duals: tuple[Fraction, ...] | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, A: list[list[Fraction]], b: list[Fraction], basis: list[int]):
        self.rows = A
        self.rhs = b
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        p = row[j]
        if p != 1:
            row[:] = [a / p for a in row]
            self.rhs[r] /= p
        for k, other in enumerate(self.rows):
            f = other[j]
            if k == r or f == 0:
                continue
            other[:] = [a - f * e for a, e in zip(other, row)]
            self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, c: list[Fraction]) -> tuple[list[Fraction], Fraction]:
        red = list(c)
        z = Fraction(0)
        for r, j in enumerate(self.basis):
            cb = c[j]
            if cb == 0:
                continue
            red = [a - cb * e for a, e in zip(red, self.rows[r])]
            z += cb * self.rhs[r]
        return red, z

    def run(self, c: list[Fraction], allowed: int) -> str:
        """Bland pivoting on columns ``< allowed`` until optimal or unbounded."""
        red, _ = self.reduced_costs(c)
        while True:
            j = next((k for k in range(allowed) if red[k] < 0), None)
            if j is None:
                return OPTIMAL
            best: tuple[Fraction, int, int] | None = None
            for r, row in enumerate(self.rows):
                a = row[j]
                if a > 0:
                    cand = (self.rhs[r] / a, self.basis[r], r)
                    if best is None or cand < best:
                        best = cand
            if best is None:
                return UNBOUNDED
            r = best[2]
            self.pivot(r, j)
            f = red[j]
            row = self.rows[r]
            red = [a - f * e for a, e in zip(red, row)]


def solve(
    c: Sequence[Fraction | int],
    A: Sequence[Sequence[Fraction | int]],
    b: Sequence[Fraction | int],
    basis: Sequence[int] | None = None,
) -> LPResult:
    """Minimises ``c.x`` subject to ``A x = b`` and ``x >= 0``.

    Args:
      c: objective coefficients, length ``n``.
      A: ``m`` rows of length ``n``.
      b: right-hand side, length ``m``.
      basis: optional starting basis, one column index per row. The basis
        must be primal feasible; phase one is skipped when it is given.

    Returns:
      An :class:`LPResult`. For optimal problems ``duals`` are multipliers
      ``y`` with ``y.A <= c`` componentwise and ``y.b == objective``; they
      are ``None`` when phase one had to discard redundant rows.
    """
    m = len(A)
    n = len(c)
    cost = [Fraction(v) for v in c]
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")

    sign = [1] * m
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for r in range(m):
        br = Fraction(b[r])
        if basis is None and br < 0:
            sign[r] = -1
        s = sign[r]
        ident = [Fraction(0)] * m
        ident[r] = Fraction(1)
        rows.append([s * Fraction(a) for a in A[r]] + ident)
        rhs.append(s * br)
    width = n + m

    dropped = False
    if basis is None:
        tab = _Tableau(rows, rhs, list(range(n, width)))
        phase1 = [Fraction(0)] * n + [Fraction(1)] * m
        tab.run(phase1, width)
        _, infeas = tab.reduced_costs(phase1)
        if infeas > 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out; rows with no real entry are redundant
        keep = []
        for r in range(m):
            if tab.basis[r] >= n:
                j = next((k for k in range(n) if tab.rows[r][k] != 0), None)
                if j is None:
                    dropped = True
                    continue
                tab.pivot(r, j)
            keep.append(r)
        tab.rows = [tab.rows[r] for r in keep]
        tab.rhs = [tab.rhs[r] for r in keep]
        tab.basis = [tab.basis[r] for r in keep]
    else:
        if len(basis) != m:
            raise ValueError("starting basis needs one column per row")
        tab = _Tableau(rows, rhs, [0] * m)
        for r, j in enumerate(basis):
            if tab.rows[r][j] == 0:
                raise ValueError("starting basis is singular")
            tab.pivot(r, j)
        tab.pivots = 0
        if any(v < 0 for v in tab.rhs):
            raise ValueError("starting basis is not primal feasible")

    full_cost = cost + [Fraction(0)] * m
    status = tab.run(full_cost, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    x = [Fraction(0)] * n
    for r, j in enumerate(tab.basis):
        x[j] = tab.rhs[r]
    red, z = tab.reduced_costs(full_cost)
    if dropped:
        return LPResult(OPTIMAL, tuple(x), z, None, tab.pivots)
    # reduced cost of identity column r is -y_r in the sign-adjusted system
    duals = tuple(-sign[r] * red[n + r] for r in range(m))
    return LPResult(OPTIMAL, tuple(x), z, duals, tab.pivots)
