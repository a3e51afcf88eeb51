"""Airport and simple families of TU-games with strategies."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import core_nonempty
from .procedures import maxmin
from .strategic import GameWithStrategies
from .tugame import TUGame, airport_from_costs, grand, is_simple, members


def is_airport_game(g: TUGame) -> bool:
    """Cost game equal to the max of its nonnegative singleton costs."""
    if g.orientation != "cost":
        return False
    single = [g[1 << i] for i in range(g.n)]
    if any(c < 0 for c in single):
        return False
    return all(g[S] == max(single[i] for i in members(S)) for S in g.coalitions())


def is_airport_family(gws: GameWithStrategies) -> bool:
    return all(is_airport_game(g) for g in gws.table)


@dataclass(frozen=True)
class AirportCondition:
    """Outcome of the pivot test for a minmax airport transform.

    When ``holds``, ``minorant`` is an airport game lying below ``secured`` with the
    same grand-coalition cost, so each of its core allocations is in the core
    of ``secured``.
    """

    holds: bool
    pivot: int | None = None
    minorant: TUGame | None = None
    costs: tuple[Fraction, ...] | None = None


def airport_sufficient_condition(secured: TUGame) -> AirportCondition:
    if secured.orientation != "cost":
        raise ValueError("expects the minmax transform of a cost family")
    N = secured.grand
    top = secured[N]
    pivot = next(
        (
            i
            for i in range(secured.n)
            if all(secured[S] >= top for S in range(1, N + 1) if S >> i & 1)
        ),
        None,
    )
    if pivot is None:
        return AirportCondition(False)
    costs = tuple(min(secured[S] for S in range(1, N + 1) if S >> i & 1) for i in range(secured.n))
    return AirportCondition(True, pivot, airport_from_costs(costs), costs)


def most_costly_player(gws: GameWithStrategies) -> int | None:
    """Smallest player whose singleton cost is maximal at every profile."""
    for i in range(gws.n):
        if all(g[1 << i] == max(g[1 << j] for j in range(gws.n)) for g in gws.table):
            return i
    return None


def is_simple_family(gws: GameWithStrategies) -> bool:
    return gws.orientation == "value" and all(is_simple(g) for g in gws.table)


def simple_core_characterization(gws: GameWithStrategies) -> tuple[bool, int | None]:
    """Veto-threat test for a nonempty core of the maxmin transform.

    Looks for a player ``i`` who, against every choice of the others, has a
    strategy making themself a veto player. Returns the smallest such player.
    """
    if not is_simple_family(gws):
        raise ValueError("expects a family of simple games")
    N = grand(gws.n)
    strides = gws.strides
    for i in range(gws.n):
        rest = gws.offsets([j for j in range(gws.n) if j != i])
        without_i = N & ~(1 << i)
        if all(
            any(
                gws.table[o + s * strides[i]][without_i] == 0
                for s in range(gws.strategy_counts[i])
            )
            for o in rest
        ):
            return True, i
    return False, None


def simple_core_consistent(gws: GameWithStrategies) -> bool:
    """The veto-threat test agrees with the LP balancedness test."""
    return simple_core_characterization(gws)[0] == core_nonempty(maxmin(gws).game)[0]
