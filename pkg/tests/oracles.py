"""Independent brute-force oracles used to cross-check the library."""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from tustrat import TUGame, game_at, negate

# minimal balanced collections (with weights) for up to three players,
# players written 0-based as bitmasks
_COLLECTIONS = {
    1: [],
    2: [{0b01: 1, 0b10: 1}],
    3: [
        {0b001: 1, 0b010: 1, 0b100: 1},
        {0b001: 1, 0b110: 1},
        {0b010: 1, 0b101: 1},
        {0b100: 1, 0b011: 1},
        {0b011: Fraction(1, 2), 0b101: Fraction(1, 2), 0b110: Fraction(1, 2)},
    ],
}


def shapley_by_permutations(g: TUGame) -> tuple[Fraction, ...]:
    n = g.n
    totals = [Fraction(0)] * n
    for order in permutations(range(n)):
        S = 0
        for i in order:
            totals[i] += g[S | 1 << i] - g[S]
            S |= 1 << i
    return tuple(t / factorial(n) for t in totals)


def balanced_by_collections(g: TUGame) -> bool:
    """Bondareva-Shapley test over the minimal balanced collections (n <= 3)."""
    if g.orientation == "cost":
        g = negate(g)
    if g.n > 3:
        raise ValueError("oracle only knows collections for n <= 3")
    top = g[g.grand]
    return all(sum(w * g[S] for S, w in coll.items()) <= top for coll in _COLLECTIONS[g.n])


def secure_by_enumeration(gws, S: int) -> Fraction:
    """max over S-choices of min over outsider choices, from explicit profiles."""
    n = gws.n
    inside = [i for i in range(n) if S >> i & 1]
    outside = [i for i in range(n) if not S >> i & 1]
    sign = 1 if gws.orientation == "value" else -1
    best = None
    for own in product(*(range(gws.strategy_counts[i]) for i in inside)):
        worst = None
        for rest in product(*(range(gws.strategy_counts[i]) for i in outside)):
            x = [0] * n
            for i, s in zip(inside, own):
                x[i] = s
            for i, s in zip(outside, rest):
                x[i] = s
            w = sign * game_at(gws, x)[S]
            worst = w if worst is None else min(worst, w)
        best = worst if best is None else max(best, worst)
    return sign * best
