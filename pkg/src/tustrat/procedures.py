"""Procedures turning a TU-game with strategies into a TU-game.

``maxmin`` gives every coalition the worth it can secure against all
outsiders; ``minmax`` is the same idea for cost families; ``maxmax`` is the
optimistic variant. The ``check_*`` functions verify, on a concrete
instance, the axioms characterising the secure-worth procedure and the
properties it carries over from the table games.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import Allocation, coalition_sums, member_by_sums
from .strategic import (
    GameWithStrategies,
    Profile,
    delete_strategy,
    guarantee_game,
    is_weakly_dominated,
    is_weakly_dominated_threat,
    merge_coalition,
)
from .tugame import TUGame, grand, is_monotone, is_superadditive, members, negate, subsets


@dataclass(frozen=True)
class TransformResult:
    """A transformed game plus, per nonempty coalition, an optimising profile.

    ``witness[S]`` is a full profile at which the table game evaluated at ``S``
    reproduces ``game[S]``: the coalition's optimal choice completed by the
    outsiders' worst reply (for ``maxmax`` simply the best profile).
    """

    game: TUGame
    witness: dict[int, Profile]


Procedure = Callable[[GameWithStrategies], TransformResult]


def _secure(gws: GameWithStrategies, S: int) -> tuple[Fraction, int]:
    """Optimal secured worth of ``S`` and the table index attaining it."""
    table = gws.table
    own = gws.offsets(members(S))
    comp = gws.offsets([i for i in range(gws.n) if not S >> i & 1])
    value_sense = gws.orientation == "value"
    best: Fraction | None = None
    best_idx = 0
    for o in own:
        worst_idx = o + comp[0]
        worst = table[worst_idx][S]
        for c in comp[1:]:
            w = table[o + c][S]
            if (w < worst) if value_sense else (w > worst):
                worst, worst_idx = w, o + c
        if best is None or ((worst > best) if value_sense else (worst < best)):
            best, best_idx = worst, worst_idx
    return best, best_idx


def _secure_all(gws: GameWithStrategies) -> TransformResult:
    n = gws.n
    worth = [Fraction(0)] * (1 << n)
    witness = {}
    for S in range(1, 1 << n):
        worth[S], idx = _secure(gws, S)
        witness[S] = gws.profile(idx)
    return TransformResult(TUGame(n, gws.orientation, tuple(worth)), witness)


def maxmin(gws: GameWithStrategies) -> TransformResult:
    """Best worth each coalition can guarantee whatever the outsiders play.

    Ties between coalition choices, and between outsider replies, go to the
    lexicographically smallest profile.
    """
    if gws.orientation != "value":
        raise ValueError("maxmin expects a value family; use minmax for cost families")
    return _secure_all(gws)


def minmax(gws: GameWithStrategies) -> TransformResult:
    """Lowest cost each coalition can guarantee whatever the outsiders play."""
    if gws.orientation != "cost":
        raise ValueError("minmax expects a cost family; use maxmin for value families")
    return _secure_all(gws)


def maxmax(gws: GameWithStrategies) -> TransformResult:
    """Optimistic transform: best table worth over all profiles.

    For cost families this is the smallest cost over all profiles.
    """
    n = gws.n
    value_sense = gws.orientation == "value"
    worth = [Fraction(0)] * (1 << n)
    witness = {}
    for S in range(1, 1 << n):
        best_idx = 0
        best = gws.table[0][S]
        for idx, g in enumerate(gws.table):
            w = g[S]
            if (w > best) if value_sense else (w < best):
                best, best_idx = w, idx
        worth[S] = best
        witness[S] = gws.profile(best_idx)
    return TransformResult(TUGame(n, gws.orientation, tuple(worth)), witness)


def transform(gws: GameWithStrategies) -> TransformResult:
    """``maxmin`` for value families, ``minmax`` for cost families."""
    return _secure_all(gws)


PROCEDURES: dict[str, Procedure] = {"maxmin": maxmin, "minmax": minmax, "maxmax": maxmax}


def negate_family(gws: GameWithStrategies) -> GameWithStrategies:
    return GameWithStrategies(
        gws.strategy_counts,
        tuple(negate(g) for g in gws.table),
        gws.player_names,
        gws.strategy_names,
    )


def as_value_family(gws: GameWithStrategies) -> GameWithStrategies:
    return gws if gws.orientation == "value" else negate_family(gws)


# -- axioms ------------------------------------------------------------------


def check_individual_objectivity(gws: GameWithStrategies, procedure: Procedure = transform) -> bool:
    secured = procedure(gws).game
    for i in range(gws.n):
        S = 1 << i
        worths = {g[S] for g in gws.table}
        if len(worths) == 1 and secured[S] != worths.pop():
            return False
    return True


def check_monotonicity_axiom(
    gws_hi: GameWithStrategies, gws_lo: GameWithStrategies, procedure: Procedure = transform
) -> bool:
    """Pointwise larger families must not transform to anything smaller."""
    if gws_hi.strategy_counts != gws_lo.strategy_counts or gws_hi.n != gws_lo.n:
        raise ValueError("families must share players and strategy sets")
    if not all(hi >= lo for hi, lo in zip(gws_hi.table, gws_lo.table)):
        raise ValueError("first family must dominate the second at every profile")
    return procedure(gws_hi).game >= procedure(gws_lo).game


def _deletions(gws: GameWithStrategies) -> Iterable[tuple[int, int]]:
    for i, k in enumerate(gws.strategy_counts):
        if k >= 2:
            for s in range(k):
                yield i, s


def check_irrelevance_dominated_strategies(
    gws: GameWithStrategies, procedure: Procedure = transform
) -> bool:
    """Deleting a member's weakly dominated strategy leaves that coalition's worth alone."""
    secured = procedure(gws).game
    N = grand(gws.n)
    for i, s in _deletions(gws):
        reduced = None
        for S in range(1, N + 1):
            if not S >> i & 1 or not is_weakly_dominated(gws, i, s, S):
                continue
            if reduced is None:
                reduced = procedure(delete_strategy(gws, i, s)).game
            if reduced[S] != secured[S]:
                return False
    return True


def check_irrelevance_dominated_threats(
    gws: GameWithStrategies, procedure: Procedure = transform
) -> bool:
    """Deleting an outsider's weakly dominated threat leaves that coalition's worth alone."""
    secured = procedure(gws).game
    N = grand(gws.n)
    for j, s in _deletions(gws):
        reduced = None
        for S in subsets(N & ~(1 << j)):
            if S == 0 or not is_weakly_dominated_threat(gws, j, s, S):
                continue
            if reduced is None:
                reduced = procedure(delete_strategy(gws, j, s)).game
            if reduced[S] != secured[S]:
                return False
    return True


def check_merge_invariance(
    gws: GameWithStrategies, S: int, procedure: Procedure = transform
) -> bool:
    merged = merge_coalition(gws, S)
    secured = procedure(gws).game
    merged_worth = procedure(merged.game).game
    for T in subsets(grand(gws.n) & ~S):
        if secured[T] != merged_worth[merged.to_merged(T, False)]:
            return False
        if secured[T | S] != merged_worth[merged.to_merged(T, True)]:
            return False
    return True


def check_axioms(gws: GameWithStrategies, procedure: Procedure = transform) -> dict[str, bool]:
    """Runs the single-family axiom checks.

    Monotonicity compares two families, so here it is exercised against the
    family shifted down by one on every nonempty coalition.
    """
    shifted = GameWithStrategies(
        gws.strategy_counts,
        tuple(
            TUGame(g.n, g.orientation, (Fraction(0),) + tuple(w - 1 for w in g.worth[1:]))
            for g in gws.table
        ),
        gws.player_names,
        gws.strategy_names,
    )
    return {
        "individual_objectivity": check_individual_objectivity(gws, procedure),
        "monotonicity": check_monotonicity_axiom(gws, shifted, procedure),
        "irrelevance_dominated_strategies": check_irrelevance_dominated_strategies(gws, procedure),
        "irrelevance_dominated_threats": check_irrelevance_dominated_threats(gws, procedure),
        "merge_invariance": all(
            check_merge_invariance(gws, S, procedure) for S in range(1, grand(gws.n) + 1)
        ),
    }


# -- inheritance -------------------------------------------------------------


def family_satisfies(gws: GameWithStrategies, predicate: Callable[[TUGame], bool]) -> bool:
    return all(predicate(g) for g in gws.table)


def check_superadditivity_transmission(gws: GameWithStrategies) -> bool:
    """Superadditive table games give a superadditive secure-worth game.

    Vacuously true when some table game is not superadditive. Cost families
    are checked through their negation (subadditivity under ``minmax``).
    """
    vg = as_value_family(gws)
    if not family_satisfies(vg, is_superadditive):
        return True
    return is_superadditive(maxmin(vg).game)


def check_monotonicity_transmission(gws: GameWithStrategies) -> bool:
    """Monotone table games give a monotone secure-worth game (vacuous otherwise)."""
    vg = as_value_family(gws)
    if not family_satisfies(vg, is_monotone):
        return True
    return is_monotone(maxmin(vg).game)


# -- core ----------------------------------------------------------------------


def guarantee_games(
    gws: GameWithStrategies, secured: TUGame | None = None
) -> dict[Profile, TUGame]:
    if secured is None:
        secured = transform(gws).game
    top = secured[secured.grand]
    return {x: guarantee_game(gws, x, top) for x in gws.profiles()}


def check_core_intersection(gws: GameWithStrategies, samples: Sequence[Sequence[Fraction]]) -> bool:
    """Core of the secure-worth game equals the intersection of guarantee-game cores.

    Checked exactly on the describing inequalities (each coalition's secure
    worth is the best of its guarantee-game worths) and then on ``samples``
    by comparing memberships on both sides.
    """
    secured = transform(gws).game
    games = list(guarantee_games(gws, secured).values())
    pick = max if gws.orientation == "value" else min
    N = secured.grand
    for S in range(1, N + 1):
        if secured[S] != pick(g[S] for g in games):
            return False
    distinct = list(set(games))
    for a in samples:
        if len(a) != gws.n:
            raise ValueError("sample allocation has the wrong length")
        sums = coalition_sums([Fraction(v) for v in a])
        if member_by_sums(secured, sums) != all(member_by_sums(g, sums) for g in distinct):
            return False
    return True


def intersection_member(gws: GameWithStrategies, a: Allocation) -> bool:
    """Whether ``a`` lies in the core of every guarantee game."""
    sums = coalition_sums(list(a))
    return all(member_by_sums(g, sums) for g in set(guarantee_games(gws).values()))
