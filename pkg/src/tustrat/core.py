"""The core of a TU-game: membership, non-emptiness and vertices.

For cost games the inequalities flip: an allocation ``a`` is in the core of a
cost game ``c`` when ``sum(a) == c(N)`` and ``sum(a over S) <= c(S)``. That
is the negation of the core of the value game ``-c``, and every routine
here goes through that identity.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import simplex
from .tugame import RationalLike, TUGame, negate, to_rational

MAX_VERTEX_PLAYERS = 5

Allocation = tuple[Fraction, ...]


def coalition_sums(a: Sequence[Fraction]) -> list[Fraction]:
    """``sums[S]`` is the total of ``a`` over coalition ``S``."""
    n = len(a)
    sums = [Fraction(0)] * (1 << n)
    for S in range(1, 1 << n):
        low = S & -S
        sums[S] = sums[S ^ low] + a[low.bit_length() - 1]
    return sums


def _as_allocation(g: TUGame, a: Sequence[RationalLike]) -> Allocation:
    if len(a) != g.n:
        raise ValueError(f"allocation has {len(a)} entries, game has {g.n} players")
    return tuple(to_rational(x) for x in a)


def core_membership(g: TUGame, a: Sequence[RationalLike]) -> bool:
    return member_by_sums(g, coalition_sums(_as_allocation(g, a)))


def member_by_sums(g: TUGame, sums: Sequence[Fraction]) -> bool:
    """Core test from precomputed :func:`coalition_sums`."""
    w = g.worth
    N = g.grand
    if sums[N] != w[N]:
        return False
    if g.orientation == "value":
        return all(sums[S] >= w[S] for S in range(1, N))
    return all(sums[S] <= w[S] for S in range(1, N))


def core_lp(g: TUGame) -> tuple[Fraction, Allocation]:
    """Solves ``min sum(x)`` s.t. ``sum(x over S) >= v(S)`` for all ``S != 0``.

    ``g`` must be a value game. The LP is handled through its dual
    ``max sum_S y_S v(S)`` over the fractional partitions ``y`` of ``N``,
    which starts from the basis of singleton coalitions and needs no phase
    one. The primal optimum is read off the simplex multipliers.
    """
    if g.orientation != "value":
        raise ValueError("core_lp expects a value game")
    n = g.n
    cols = list(range(1, 1 << n))
    c = [-g[S] for S in cols]
    A = [[Fraction(1) if S >> i & 1 else Fraction(0) for S in cols] for i in range(n)]
    b = [Fraction(1)] * n
    start = [(1 << i) - 1 for i in range(n)]
    res = simplex.solve(c, A, b, basis=start)
    if res.status != simplex.OPTIMAL:  # pragma: no cover - bounded by construction
        raise RuntimeError(f"core LP unexpectedly {res.status}")
    x = tuple(-y for y in res.duals)
    return -res.objective, x


def core_nonempty(g: TUGame) -> tuple[bool, Allocation | None]:
    """Balancedness test with an exact witness.

    Returns ``(True, a)`` with ``a`` in the core when the core is nonempty,
    else ``(False, None)``.
    """
    v = g if g.orientation == "value" else negate(g)
    total, x = core_lp(v)
    if total != v[v.grand]:
        return False, None
    if g.orientation == "cost":
        x = tuple(-xi for xi in x)
    return True, x


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan on a square system; ``None`` when singular."""
    n = len(rows)
    M = [row[:] + [r] for row, r in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        pr = [v / p for v in M[col]]
        M[col] = pr
        for r in range(n):
            f = M[r][col]
            if r != col and f != 0:
                M[r] = [a - f * b for a, b in zip(M[r], pr)]
    return [M[r][n] for r in range(n)]


def core_vertices(g: TUGame) -> set[Allocation]:
    """Vertex set of the core, by brute force over tight constraint sets.

    Every vertex lies on the efficiency hyperplane and on ``n - 1`` further
    linearly independent tight coalition constraints. All such systems are
    solved and the feasible solutions kept. Guarded to ``n <= 5``.
    """
    n = g.n
    if n > MAX_VERTEX_PLAYERS:
        raise ValueError(f"core_vertices supports at most {MAX_VERTEX_PLAYERS} players, got {n}")
    N = g.grand
    proper = list(range(1, N))
    indicator = {S: [Fraction(S >> i & 1) for i in range(n)] for S in range(1, N + 1)}
    found: set[Allocation] = set()
    seen: set[Allocation] = set()
    for tight in combinations(proper, n - 1):
        rows = [indicator[N]] + [indicator[S] for S in tight]
        rhs = [g[N]] + [g[S] for S in tight]
        sol = _solve_square(rows, rhs)
        if sol is None:
            continue
        point = tuple(sol)
        if point in seen:
            continue
        seen.add(point)
        if core_membership(g, point):
            found.add(point)
    return found


def is_balanced(g: TUGame) -> bool:
    return core_nonempty(g)[0]
