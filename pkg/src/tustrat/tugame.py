"""Classical TU-games over bitmask coalitions, in exact rational arithmetic.

A coalition is a plain ``int`` whose bit ``i`` is set when player ``i``
belongs to it. Player indices are zero based; the grand coalition of an
``n``-player game is ``(1 << n) - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Iterator, Literal, Mapping, Sequence, Union

Orientation = Literal["value", "cost"]
ORIENTATIONS: tuple[str, ...] = ("value", "cost")
MAX_PLAYERS = 16

RationalLike = Union[int, Fraction, str]


def to_rational(x: RationalLike | float) -> Fraction:
    """Converts ``x`` to an exact :class:`Fraction`.

    Strings may be integers, ``"p/q"`` or finite decimals (``"0.25"`` becomes
    ``1/4``). Floats go through their shortest decimal repr, so ``0.1`` is
    ``1/10`` and not the binary approximation.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        text = x.strip()
        if text.lower() in {"inf", "-inf", "+inf", "nan", "infinity", "-infinity"}:
            raise ValueError(f"not a finite rational: {x!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(q: Fraction) -> str:
    """Lowest-terms string: ``"3"``, ``"-1/4"``."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- coalition helpers -------------------------------------------------------


def grand(n: int) -> int:
    return (1 << n) - 1


def members(S: int) -> tuple[int, ...]:
    """Players in ``S`` in ascending order."""
    out = []
    i = 0
    while S:
        if S & 1:
            out.append(i)
        S >>= 1
        i += 1
    return tuple(out)


def coalition(players: Iterable[int]) -> int:
    S = 0
    for i in players:
        S |= 1 << i
    return S


def size(S: int) -> int:
    return bin(S).count("1")


def subsets(S: int) -> Iterator[int]:
    """All subsets of ``S``, including ``0`` and ``S`` itself."""
    T = S
    while True:
        yield T
        if T == 0:
            return
        T = (T - 1) & S


def coalition_order_key(S: int) -> tuple[int, tuple[int, ...]]:
    """Sort key giving the familiar table order: by size, then members."""
    return size(S), members(S)


# -- the game ----------------------------------------------------------------


@dataclass(frozen=True)
class TUGame:
    """A TU-game ``worth: 2^N -> Q`` with ``worth[0] == 0``.

    ``orientation`` says how worths are read: ``"value"`` games are gains a
    coalition wants to maximise, ``"cost"`` games are costs to minimise.
    Solution concepts that care (the core) honour it; Shapley does not.
    """

    n: int
    orientation: Orientation
    worth: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_PLAYERS:
            raise ValueError(f"player count must be in 1..{MAX_PLAYERS}, got {self.n}")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if len(self.worth) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} worths, got {len(self.worth)}")
        if self.worth[0] != 0:
            raise ValueError("worth of the empty coalition must be 0")

    def __getitem__(self, S: int) -> Fraction:
        return self.worth[S]

    @property
    def grand(self) -> int:
        return grand(self.n)

    def coalitions(self, include_empty: bool = False) -> range:
        return range(0 if include_empty else 1, 1 << self.n)

    def __le__(self, other: TUGame) -> bool:
        return all(a <= b for a, b in zip(self.worth, other.worth))

    def __ge__(self, other: TUGame) -> bool:
        return all(a >= b for a, b in zip(self.worth, other.worth))


def make_game(
    n: int,
    orientation: Orientation = "value",
    entries: Mapping[int, RationalLike] | None = None,
) -> TUGame:
    """Builds a game from a sparse ``{coalition: worth}`` map.

    Coalitions missing from ``entries`` get worth 0. An entry for the empty
    coalition is tolerated only when it is zero.
    """
    if not 1 <= n <= MAX_PLAYERS:
        raise ValueError(f"player count must be in 1..{MAX_PLAYERS}, got {n}")
    worth = [Fraction(0)] * (1 << n)
    for S, w in (entries or {}).items():
        if not 0 <= S < 1 << n:
            raise ValueError(f"coalition {S:#b} out of range for n={n}")
        q = to_rational(w)
        if S == 0 and q != 0:
            raise ValueError("worth of the empty coalition must be 0")
        worth[S] = q
    return TUGame(n, orientation, tuple(worth))


def game_from_sequence(
    n: int, values: Sequence[RationalLike], orientation: Orientation = "value"
) -> TUGame:
    """Builds a game from worths listed in table order.

    ``values`` follows :func:`coalition_order_key` over the nonempty
    coalitions, e.g. for three players ``(1, 2, 3, 12, 13, 23, 123)``.
    """
    order = sorted(range(1, 1 << n), key=coalition_order_key)
    if len(values) != len(order):
        raise ValueError(f"expected {len(order)} values, got {len(values)}")
    return make_game(n, orientation, dict(zip(order, values)))


def table_values(g: TUGame) -> tuple[Fraction, ...]:
    """Inverse of :func:`game_from_sequence`."""
    return tuple(g[S] for S in sorted(g.coalitions(), key=coalition_order_key))


def negate(g: TUGame) -> TUGame:
    flipped: Orientation = "cost" if g.orientation == "value" else "value"
    return TUGame(g.n, flipped, tuple(-w for w in g.worth))


def as_value(g: TUGame) -> TUGame:
    """``g`` itself for value games, its negation for cost games."""
    return g if g.orientation == "value" else negate(g)


def _require_value(g: TUGame, what: str) -> None:
    if g.orientation != "value":
        raise ValueError(f"{what} expects a value game; pass negate(g) for cost games")


# -- Shapley value -----------------------------------------------------------


def shapley(g: TUGame) -> tuple[Fraction, ...]:
    """Shapley value via the subset-weighted marginal contribution formula.

    The stored worths are used as is regardless of orientation, so a cost game
    gets its cost shares.
    """
    n = g.n
    weights = [Fraction(factorial(s) * factorial(n - s - 1), factorial(n)) for s in range(n)]
    value = [Fraction(0)] * n
    w = g.worth
    for S in range(1 << n):
        s = size(S)
        if s == n:
            continue
        coef = weights[s]
        for i in range(n):
            bit = 1 << i
            if not S & bit:
                value[i] += coef * (w[S | bit] - w[S])
    return tuple(value)


# -- predicates --------------------------------------------------------------


def is_superadditive(g: TUGame) -> bool:
    _require_value(g, "is_superadditive")
    w = g.worth
    full = g.grand
    for S in range(1, 1 << g.n):
        rest = full & ~S
        for T in subsets(rest):
            # each unordered pair once; T == 0 is trivially fine
            if T and T > S and w[S | T] < w[S] + w[T]:
                return False
    return True


def is_monotone(g: TUGame) -> bool:
    _require_value(g, "is_monotone")
    w = g.worth
    # covering pairs suffice: S ⊂ T reaches T through single additions
    for T in range(1, 1 << g.n):
        for i in members(T):
            if w[T & ~(1 << i)] > w[T]:
                return False
    return True


def is_convex(g: TUGame) -> bool:
    """Supermodularity, checked on all ``i`` and ``S ⊆ T ⊆ N \\ {i}``."""
    _require_value(g, "is_convex")
    w = g.worth
    full = g.grand
    for i in range(g.n):
        bit = 1 << i
        others = full & ~bit
        for T in subsets(others):
            gain_T = w[T | bit] - w[T]
            for S in subsets(T):
                if w[S | bit] - w[S] > gain_T:
                    return False
    return True


def is_simple(g: TUGame) -> bool:
    """0/1 worths, ``worth(N) == 1`` and monotone."""
    _require_value(g, "is_simple")
    if any(w not in (0, 1) for w in g.worth):
        return False
    return g[g.grand] == 1 and is_monotone(g)


def is_veto(g: TUGame, i: int) -> bool:
    if not 0 <= i < g.n:
        raise IndexError(f"player {i} out of range")
    return g[g.grand & ~(1 << i)] == 0


def airport_from_costs(singleton_costs: Sequence[RationalLike]) -> TUGame:
    """Airport cost game: a coalition pays for the longest runway it needs."""
    costs = [to_rational(x) for x in singleton_costs]
    if any(c < 0 for c in costs):
        raise ValueError("runway costs must be nonnegative")
    n = len(costs)
    worth = [Fraction(0)] * (1 << n)
    for S in range(1, 1 << n):
        low = (S & -S).bit_length() - 1
        worth[S] = max(worth[S & ~(1 << low)], costs[low])
    return TUGame(n, "cost", tuple(worth))
