"""Seeded random instances for the property suites.

Each class is enforced by construction, never by rejection sampling, so the
hypotheses of the inheritance results hold on every generated family.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .core import Allocation, core_nonempty, core_vertices
from .procedures import guarantee_games, transform
from .strategic import GameWithStrategies, from_function
from .tugame import TUGame, airport_from_costs, grand, members, size, subsets

CLASSES = ("general", "superadditive", "monotone", "simple", "airport")
MAX_GEN_PLAYERS = 4
MAX_GEN_STRATEGIES = 3


def _rational(rng: random.Random, lo: int, hi: int) -> Fraction:
    return Fraction(rng.randint(lo * 2, hi * 2), rng.choice((1, 1, 2)))


def _general(rng: random.Random, n: int) -> TUGame:
    worth = [Fraction(0)] + [_rational(rng, -4, 10) for _ in range(1, 1 << n)]
    return TUGame(n, "value", tuple(worth))


def _superadditive(rng: random.Random, n: int) -> TUGame:
    # close random worths under splitting, smallest coalitions first
    worth = [Fraction(0)] * (1 << n)
    for S in sorted(range(1, 1 << n), key=size):
        best = _rational(rng, -3, 6)
        low = S & -S
        for A in subsets(S & ~low):
            # A ∪ {low} against the rest covers every unordered split once
            part = A | low
            if part != S:
                best = max(best, worth[part] + worth[S & ~part])
        worth[S] = best
    return TUGame(n, "value", tuple(worth))


def _monotone(rng: random.Random, n: int) -> TUGame:
    worth = [Fraction(0)] * (1 << n)
    for S in sorted(range(1, 1 << n), key=size):
        floor = max(worth[S & ~(1 << i)] for i in members(S))
        worth[S] = max(floor, _rational(rng, 0, 8))
    return TUGame(n, "value", tuple(worth))


def _simple(rng: random.Random, n: int) -> TUGame:
    N = grand(n)
    worth = [Fraction(0)] * (1 << n)
    for S in sorted(range(1, 1 << n), key=size):
        won = S == N or rng.random() < 0.35 or any(worth[S & ~(1 << i)] for i in members(S))
        worth[S] = Fraction(1 if won else 0)
    return TUGame(n, "value", tuple(worth))


def generate_instance(
    seed: int, n: int, max_strats: int = MAX_GEN_STRATEGIES, kind: str = "general"
) -> GameWithStrategies:
    """Deterministic random family of the requested class.

    Airport families plant a player with the most costly type at every
    profile for about half the seeds, so the pivot result is exercised.
    """
    if kind not in CLASSES:
        raise ValueError(f"unknown class {kind!r}; choose from {', '.join(CLASSES)}")
    if not 1 <= n <= MAX_GEN_PLAYERS:
        raise ValueError(f"n must be in 1..{MAX_GEN_PLAYERS}, got {n}")
    if not 1 <= max_strats <= MAX_GEN_STRATEGIES:
        raise ValueError(f"max_strats must be in 1..{MAX_GEN_STRATEGIES}, got {max_strats}")
    rng = random.Random(f"{kind}:{seed}:{n}:{max_strats}")
    counts = [rng.randint(1, max_strats) for _ in range(n)]

    if kind == "airport":
        planted = rng.randrange(n) if rng.random() < 0.5 else None

        def game_of(_x: tuple[int, ...]) -> TUGame:
            costs = [Fraction(rng.randint(0, 12)) for _ in range(n)]
            if planted is not None:
                costs[planted] = max(costs) + rng.randint(0, 3)
            return airport_from_costs(costs)

    else:
        make = {
            "general": _general,
            "superadditive": _superadditive,
            "monotone": _monotone,
            "simple": _simple,
        }[kind]

        def game_of(_x: tuple[int, ...]) -> TUGame:
            return make(rng, n)

    names = [[chr(ord("A") + 3 * i + k) for k in range(c)] for i, c in enumerate(counts)]
    return from_function(counts, game_of, strategy_names=names)


def sample_allocations(gws: GameWithStrategies, count: int, seed: int = 0) -> list[Allocation]:
    """Allocations for membership tests on the transformed game.

    Mixes points from the cores of the transform and of the guarantee games
    (when small enough to enumerate), random efficient points, efficient
    perturbations of the structured points, and a few inefficient ones.
    """
    rng = random.Random(seed)
    secured = transform(gws).game
    n = gws.n
    total = secured[secured.grand]
    structured: list[Allocation] = []
    ok, witness = core_nonempty(secured)
    if ok:
        structured.append(witness)
    if n <= 3:
        for g in set(guarantee_games(gws, secured).values()):
            structured.extend(sorted(core_vertices(g)))

    def efficient() -> Allocation:
        raw = [_rational(rng, -5, 12) for _ in range(n)]
        shift = (total - sum(raw)) / n
        return tuple(r + shift for r in raw)

    def nudge(a: Sequence[Fraction]) -> Allocation:
        out = list(a)
        if n >= 2:
            i, j = rng.sample(range(n), 2)
            delta = Fraction(rng.randint(-4, 4), rng.choice((1, 2, 4)))
            out[i] += delta
            out[j] -= delta
        return tuple(out)

    samples: list[Allocation] = []
    samples.extend(structured[: count // 3])
    while len(samples) < count:
        roll = rng.random()
        if structured and roll < 0.4:
            samples.append(nudge(rng.choice(structured)))
        elif roll < 0.9:
            samples.append(efficient())
        else:
            a = efficient()
            samples.append(tuple(v + (1 if k == 0 else 0) for k, v in enumerate(a)))
    return samples[:count]
