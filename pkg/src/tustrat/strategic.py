"""TU-games with strategies.

Every player picks one of finitely many strategies; each strategy profile
carries its own TU-game. Profiles are tuples of strategy indices and the
table is stored densely in :func:`itertools.product` order, so player 0 is
the most significant digit and iteration order is lexicographic.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Callable, Iterator, Sequence

from .tugame import RationalLike, TUGame, grand, members, to_rational

DEFAULT_SIZE_GUARD = 1 << 20
SIZE_GUARD_ENV = "GWS_SIZE_GUARD"

Profile = tuple[int, ...]


def size_guard() -> int:
    """Largest allowed ``(#profiles) * 2^n``; ``GWS_SIZE_GUARD`` overrides."""
    raw = os.environ.get(SIZE_GUARD_ENV)
    if raw is None:
        return DEFAULT_SIZE_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{SIZE_GUARD_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{SIZE_GUARD_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class GameWithStrategies:
    """A finite TU-game with strategies.

    Attributes:
      strategy_counts: number of strategies of each player (all >= 1).
      table: one :class:`TUGame` per profile, in lexicographic profile order.
      player_names: display names, defaulting to ``"1"``, ``"2"``, ...
      strategy_names: per-player strategy display names, defaulting to
        ``"s1"``, ``"s2"``, ...
    """

    strategy_counts: tuple[int, ...]
    table: tuple[TUGame, ...]
    player_names: tuple[str, ...] = field(default=(), compare=False)
    strategy_names: tuple[tuple[str, ...], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        counts = self.strategy_counts
        n = len(counts)
        if n == 0:
            raise ValueError("a game with strategies needs at least one player")
        if any(k < 1 for k in counts):
            raise ValueError("every player needs at least one strategy")
        total = prod(counts)
        if total * (1 << n) > size_guard():
            raise ValueError(
                f"size guard exceeded: {total} profiles x 2^{n} coalitions > {size_guard()}"
            )
        if len(self.table) != total:
            raise ValueError(f"table has {len(self.table)} games, expected {total} profiles")
        orientation = self.table[0].orientation
        for g in self.table:
            if g.n != n:
                raise ValueError(f"table game has {g.n} players, expected {n}")
            if g.orientation != orientation:
                raise ValueError("all table games must share one orientation")
        if not self.player_names:
            object.__setattr__(self, "player_names", tuple(str(i + 1) for i in range(n)))
        if not self.strategy_names:
            object.__setattr__(
                self,
                "strategy_names",
                tuple(tuple(f"s{k + 1}" for k in range(c)) for c in counts),
            )
        if len(self.player_names) != n or len(set(self.player_names)) != n:
            raise ValueError("player names must be unique, one per player")
        for i, names in enumerate(self.strategy_names):
            if len(names) != counts[i] or len(set(names)) != counts[i]:
                raise ValueError(f"strategy names of player {self.player_names[i]} must be unique")

    @property
    def n(self) -> int:
        return len(self.strategy_counts)

    @property
    def orientation(self) -> str:
        return self.table[0].orientation

    @property
    def strides(self) -> tuple[int, ...]:
        out = [1] * self.n
        for i in range(self.n - 2, -1, -1):
            out[i] = out[i + 1] * self.strategy_counts[i + 1]
        return tuple(out)

    def profiles(self) -> Iterator[Profile]:
        return product(*(range(k) for k in self.strategy_counts))

    def index(self, x: Sequence[int]) -> int:
        if len(x) != self.n:
            raise ValueError(f"profile has {len(x)} entries, expected {self.n}")
        idx = 0
        for i, (xi, k) in enumerate(zip(x, self.strategy_counts)):
            if not 0 <= xi < k:
                raise IndexError(f"strategy {xi} out of range for player {self.player_names[i]}")
            idx = idx * k + xi
        return idx

    def profile(self, idx: int) -> Profile:
        out = []
        for k in reversed(self.strategy_counts):
            idx, r = divmod(idx, k)
            out.append(r)
        return tuple(reversed(out))

    def offsets(self, players: Sequence[int]) -> list[int]:
        """Table-index contributions of every joint choice of ``players``.

        Listed in lexicographic order of the joint choice, players ascending.
        """
        strides = self.strides
        offs = [0]
        for i in sorted(players):
            step = strides[i]
            offs = [o + s * step for o in offs for s in range(self.strategy_counts[i])]
        return offs


def from_function(
    strategy_counts: Sequence[int],
    game_of: Callable[[Profile], TUGame],
    player_names: Sequence[str] = (),
    strategy_names: Sequence[Sequence[str]] = (),
) -> GameWithStrategies:
    counts = tuple(strategy_counts)
    table = tuple(game_of(x) for x in product(*(range(k) for k in counts)))
    return GameWithStrategies(
        counts, table, tuple(player_names), tuple(tuple(s) for s in strategy_names)
    )


def game_at(gws: GameWithStrategies, x: Sequence[int]) -> TUGame:
    return gws.table[gws.index(x)]


def delete_strategy(gws: GameWithStrategies, i: int, s: int) -> GameWithStrategies:
    """Removes strategy ``s`` of player ``i``; later strategies shift down."""
    if not 0 <= i < gws.n:
        raise IndexError(f"player {i} out of range")
    k = gws.strategy_counts[i]
    if not 0 <= s < k:
        raise IndexError(f"strategy {s} out of range for player {gws.player_names[i]}")
    if k == 1:
        raise ValueError(f"cannot delete the only strategy of player {gws.player_names[i]}")
    counts = gws.strategy_counts[:i] + (k - 1,) + gws.strategy_counts[i + 1 :]
    table = tuple(g for x, g in zip(gws.profiles(), gws.table) if x[i] != s)
    names = list(gws.strategy_names)
    names[i] = names[i][:s] + names[i][s + 1 :]
    return GameWithStrategies(counts, table, gws.player_names, tuple(names))


def _at_least_as_good(a: Fraction, b: Fraction, orientation: str) -> bool:
    return a >= b if orientation == "value" else a <= b


def _check_coalition(gws: GameWithStrategies, S: int) -> None:
    if not 0 < S <= grand(gws.n):
        raise ValueError(f"coalition {S:#b} is empty or out of range")


def weak_dominator(gws: GameWithStrategies, i: int, s: int, S: int) -> int | None:
    """Smallest strategy of ``i`` that weakly dominates ``s`` for coalition ``S``.

    For cost families "dominates" means never costs ``S`` more.
    """
    _check_coalition(gws, S)
    if not S >> i & 1:
        raise ValueError("the deviating player must belong to the coalition")
    stride = gws.strides[i]
    rest = gws.offsets([j for j in range(gws.n) if j != i])
    orient = gws.orientation
    for alt in range(gws.strategy_counts[i]):
        if alt == s:
            continue
        if all(
            _at_least_as_good(gws.table[o + alt * stride][S], gws.table[o + s * stride][S], orient)
            for o in rest
        ):
            return alt
    return None


def is_weakly_dominated(gws: GameWithStrategies, i: int, s: int, S: int) -> bool:
    return weak_dominator(gws, i, s, S) is not None


def threat_replacements(
    gws: GameWithStrategies, j: int, s: int, S: int
) -> dict[Profile, int] | None:
    """Per opponent profile, the smallest alternative of ``j`` hurting ``S`` as much as ``s``.

    Keys are full profiles with ``j``'s entry set to ``s``. ``None`` when some
    opponent profile has no such alternative, i.e. ``s`` is not a weakly
    dominated threat. Hurting means lower worth (higher cost for cost games).
    """
    _check_coalition(gws, S)
    if S >> j & 1:
        raise ValueError("the threatening player must be outside the coalition")
    stride = gws.strides[j]
    orient = gws.orientation
    out: dict[Profile, int] = {}
    for o in gws.offsets([k for k in range(gws.n) if k != j]):
        here = gws.table[o + s * stride][S]
        alt = next(
            (
                a
                for a in range(gws.strategy_counts[j])
                if a != s and _at_least_as_good(here, gws.table[o + a * stride][S], orient)
            ),
            None,
        )
        if alt is None:
            return None
        out[gws.profile(o + s * stride)] = alt
    return out


def is_weakly_dominated_threat(gws: GameWithStrategies, j: int, s: int, S: int) -> bool:
    return threat_replacements(gws, j, s, S) is not None


@dataclass(frozen=True)
class MergedGame:
    """``gws`` with coalition ``coalition`` acting as a single player.

    The merged player sits at index 0; the remaining players follow in their
    original order. A strategy ``k`` of the merged player encodes the joint
    choice of ``block`` members in mixed radix, lowest-index member most
    significant (so ``k`` enumerates joint choices lexicographically).
    """

    game: GameWithStrategies
    coalition: int
    block: tuple[int, ...]
    others: tuple[int, ...]
    source_counts: tuple[int, ...]

    def split(self, k: int) -> dict[int, int]:
        """Original player -> strategy for merged strategy ``k``."""
        return _split(self.block, self.source_counts, k)

    def original_profile(self, xs: Sequence[int]) -> Profile:
        return _unmerge(self.block, self.others, self.source_counts, xs)

    def to_merged(self, T: int, with_block: bool) -> int:
        """Coalition ``T`` of non-block players, optionally joined by the block."""
        if T & self.coalition:
            raise ValueError("T must avoid the merged coalition")
        out = 1 if with_block else 0
        for pos, i in enumerate(self.others, start=1):
            if T >> i & 1:
                out |= 1 << pos
        return out

    def to_original(self, M: int) -> int:
        out = self.coalition if M & 1 else 0
        for pos, i in enumerate(self.others, start=1):
            if M >> pos & 1:
                out |= 1 << i
        return out


def _split(block: Sequence[int], counts: Sequence[int], k: int) -> dict[int, int]:
    out = {}
    for i in reversed(block):
        k, out[i] = divmod(k, counts[i])
    return out


def _unmerge(
    block: Sequence[int], others: Sequence[int], counts: Sequence[int], xs: Sequence[int]
) -> Profile:
    x = [0] * len(counts)
    for i, si in _split(block, counts, xs[0]).items():
        x[i] = si
    for pos, i in enumerate(others, start=1):
        x[i] = xs[pos]
    return tuple(x)


def merge_coalition(gws: GameWithStrategies, S: int) -> MergedGame:
    _check_coalition(gws, S)
    block = members(S)
    others = tuple(i for i in range(gws.n) if not S >> i & 1)
    counts = (prod(gws.strategy_counts[i] for i in block),) + tuple(
        gws.strategy_counts[i] for i in others
    )
    m = len(counts)
    origin = [0] * (1 << m)
    for M in range(1 << m):
        out = S if M & 1 else 0
        for pos, i in enumerate(others, start=1):
            if M >> pos & 1:
                out |= 1 << i
        origin[M] = out
    def game_of(xs: Profile) -> TUGame:
        g = game_at(gws, _unmerge(block, others, gws.strategy_counts, xs))
        return TUGame(m, g.orientation, tuple(g[origin[M]] for M in range(1 << m)))

    block_name = "[" + "&".join(gws.player_names[i] for i in block) + "]"
    block_strats = [
        "/".join(gws.strategy_names[i][c] for i, c in zip(block, combo))
        for combo in product(*(range(gws.strategy_counts[i]) for i in block))
    ]
    merged = from_function(
        counts,
        game_of,
        (block_name,) + tuple(gws.player_names[i] for i in others),
        [block_strats] + [gws.strategy_names[i] for i in others],
    )
    return MergedGame(merged, S, block, others, gws.strategy_counts)


def worst_completion(gws: GameWithStrategies, S: int, x: Sequence[int]) -> tuple[Fraction, Profile]:
    """Worst worth of ``S`` when it plays ``x`` restricted to ``S``.

    Outsiders range over all their joint choices; for cost games "worst" is
    the highest cost. Ties go to the lexicographically first completion.
    """
    base = sum(gws.strides[i] * x[i] for i in members(S))
    comp = gws.offsets([i for i in range(gws.n) if not S >> i & 1])
    value_sense = gws.orientation == "value"
    best_off = comp[0]
    best = gws.table[base + best_off][S]
    for o in comp[1:]:
        w = gws.table[base + o][S]
        if (w < best) if value_sense else (w > best):
            best, best_off = w, o
    return best, gws.profile(base + best_off)


def guarantee_game(gws: GameWithStrategies, x: Sequence[int], grand_worth: RationalLike) -> TUGame:
    """The game of worst-case worths when coalitions stick to ``x``.

    Every proper coalition gets the worst it can suffer while its members play
    their part of ``x``; the grand coalition is pinned to ``grand_worth``, the
    transform's grand-coalition value supplied by the caller.
    """
    gws.index(x)
    n = gws.n
    N = grand(n)
    worth = [Fraction(0)] * (1 << n)
    for S in range(1, N):
        worth[S] = worst_completion(gws, S, x)[0]
    worth[N] = to_rational(grand_worth)
    return TUGame(n, gws.table[0].orientation, tuple(worth))
