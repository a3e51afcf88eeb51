"""JSON documents for games with strategies and plain TU-games.

A game with strategies looks like::

    {
      "orientation": "value",
      "players": ["1", "2", "3"],
      "strategies": [["NL", "L"], ["NL", "L"], ["NR", "R"]],
      "games": {
        "L,L,NR": {"1": "-0.25", "1+2": "2.5", "1+2+3": "2.25"},
        ...
      }
    }

Profile keys join strategy names with ``","`` in player order; coalition keys
join player names with ``"+"`` in any order. Worths are integers, ``"p/q"``
strings or finite decimals, all read exactly. Omitted coalitions are worth
0. A plain TU-game uses a single ``"game"`` map instead of ``"strategies"``
and ``"games"``.
"""
from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from itertools import product
from math import prod
from pathlib import Path
from typing import Any, Mapping, Sequence

from .strategic import GameWithStrategies, size_guard
from .tugame import MAX_PLAYERS, ORIENTATIONS, TUGame, format_rational, members, to_rational

EMPTY_KEYS = ("∅", "{}", "")


class InstanceError(ValueError):
    """Malformed instance document."""


class _Object(dict):
    duplicates: list[str]


def _hook(pairs: list[tuple[str, Any]]) -> _Object:
    obj = _Object()
    obj.duplicates = []
    for k, v in pairs:
        if k in obj:
            obj.duplicates.append(k)
        obj[k] = v
    return obj


def _dupes(obj: Any) -> list[str]:
    return getattr(obj, "duplicates", [])


def parse_json(text: str) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_hook)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from None


def digest(text: str | bytes) -> str:
    data = text.encode("utf-8") if isinstance(text, str) else text
    return hashlib.sha256(data).hexdigest()


# -- reading -----------------------------------------------------------------


def _players(doc: Mapping[str, Any]) -> list[str]:
    players = doc.get("players")
    if not isinstance(players, list) or not players:
        raise InstanceError("'players' must be a nonempty list of names")
    names = [str(p) for p in players]
    if len(names) > MAX_PLAYERS:
        raise InstanceError(f"at most {MAX_PLAYERS} players are supported, got {len(names)}")
    for p in names:
        if not p or "+" in p or p in EMPTY_KEYS:
            raise InstanceError(f"bad player name {p!r}")
    if len(set(names)) != len(names):
        raise InstanceError("duplicate player name")
    return names


def _orientation(doc: Mapping[str, Any]) -> str:
    orientation = doc.get("orientation", "value")
    if orientation not in ORIENTATIONS:
        raise InstanceError(f"orientation must be 'value' or 'cost', got {orientation!r}")
    return orientation


def _worths(
    entries: Any, players: Sequence[str], orientation: str, where: str
) -> TUGame:
    if not isinstance(entries, Mapping):
        raise InstanceError(f"{where}: coalition map must be an object")
    if _dupes(entries):
        raise InstanceError(f"{where}: duplicate coalition key {_dupes(entries)[0]!r}")
    index = {p: i for i, p in enumerate(players)}
    n = len(players)
    worth = [Fraction(0)] * (1 << n)
    seen: dict[int, str] = {}
    for key, raw in entries.items():
        try:
            q = to_rational(raw)
        except (TypeError, ValueError, ZeroDivisionError):
            raise InstanceError(f"{where}: bad rational {raw!r} for coalition {key!r}") from None
        text = key.strip()
        if text in EMPTY_KEYS:
            if q != 0:
                raise InstanceError(f"{where}: nonzero empty-coalition entry {raw!r}")
            continue
        S = 0
        for name in text.split("+"):
            name = name.strip()
            if name not in index:
                raise InstanceError(f"{where}: unknown player {name!r} in coalition key {key!r}")
            S |= 1 << index[name]
        if S in seen:
            raise InstanceError(f"{where}: coalition key {key!r} repeats {seen[S]!r}")
        seen[S] = key
        worth[S] = q
    return TUGame(n, orientation, tuple(worth))  # type: ignore[arg-type]


def instance_from_document(doc: Any) -> GameWithStrategies:
    if not isinstance(doc, Mapping):
        raise InstanceError("document must be a JSON object")
    if _dupes(doc):
        raise InstanceError(f"duplicate key {_dupes(doc)[0]!r}")
    orientation = _orientation(doc)
    players = _players(doc)
    strategies = doc.get("strategies")
    if not isinstance(strategies, list) or len(strategies) != len(players):
        raise InstanceError("'strategies' must list one strategy-name list per player")
    strat_names: list[list[str]] = []
    for p, names in zip(players, strategies):
        if not isinstance(names, list) or not names:
            raise InstanceError(f"player {p!r} needs a nonempty strategy list")
        names = [str(s) for s in names]
        if any(not s or "," in s for s in names):
            raise InstanceError(f"bad strategy name for player {p!r}")
        if len(set(names)) != len(names):
            raise InstanceError(f"duplicate strategy name for player {p!r}")
        strat_names.append(names)

    counts = tuple(len(s) for s in strat_names)
    total = prod(counts)
    if total * (1 << len(players)) > size_guard():
        raise InstanceError(
            f"size guard exceeded: {total} profiles x 2^{len(players)} coalitions > {size_guard()}"
        )

    games = doc.get("games")
    if not isinstance(games, Mapping):
        raise InstanceError("'games' must map profile keys to coalition maps")
    if _dupes(games):
        raise InstanceError(f"duplicate profile {_dupes(games)[0]!r}")
    lookup = [{s: k for k, s in enumerate(names)} for names in strat_names]
    by_profile: dict[tuple[int, ...], TUGame] = {}
    for key, entries in games.items():
        parts = [s.strip() for s in key.split(",")]
        if len(parts) != len(players):
            raise InstanceError(f"profile key {key!r} needs {len(players)} strategy names")
        x = []
        for p, table, s in zip(players, lookup, parts):
            if s not in table:
                raise InstanceError(f"unknown strategy {s!r} for player {p!r} in profile {key!r}")
            x.append(table[s])
        profile = tuple(x)
        if profile in by_profile:
            raise InstanceError(f"duplicate profile {key!r}")
        by_profile[profile] = _worths(entries, players, orientation, f"profile {key!r}")
    table_games = []
    for x in product(*(range(k) for k in counts)):
        if x not in by_profile:
            name = ",".join(strat_names[i][s] for i, s in enumerate(x))
            raise InstanceError(f"missing profile {name!r}")
        table_games.append(by_profile[x])
    return GameWithStrategies(
        counts, tuple(table_games), tuple(players), tuple(tuple(s) for s in strat_names)
    )


def game_from_document(doc: Any) -> tuple[TUGame, tuple[str, ...]]:
    if not isinstance(doc, Mapping):
        raise InstanceError("document must be a JSON object")
    if _dupes(doc):
        raise InstanceError(f"duplicate key {_dupes(doc)[0]!r}")
    players = _players(doc)
    return _worths(doc.get("game"), players, _orientation(doc), "game"), tuple(players)


def is_plain_game(doc: Any) -> bool:
    return isinstance(doc, Mapping) and "game" in doc and "games" not in doc


def load_document(path: str | Path) -> tuple[Any, str]:
    """Parsed document and the SHA-256 of the raw file."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise InstanceError("file is not UTF-8") from None
    return parse_json(text), digest(raw)


def load_instance(path: str | Path) -> GameWithStrategies:
    return instance_from_document(load_document(path)[0])


def load_game(path: str | Path) -> tuple[TUGame, tuple[str, ...]]:
    return game_from_document(load_document(path)[0])


# -- writing -----------------------------------------------------------------


def coalition_key(S: int, players: Sequence[str]) -> str:
    if S == 0:
        return "∅"
    return "+".join(players[i] for i in members(S))


def game_entries(g: TUGame, players: Sequence[str]) -> dict[str, str]:
    """Nonempty coalitions in ascending bitmask order."""
    return {coalition_key(S, players): format_rational(g[S]) for S in g.coalitions()}


def profile_key(gws: GameWithStrategies, x: Sequence[int]) -> str:
    return ",".join(gws.strategy_names[i][s] for i, s in enumerate(x))


def instance_to_document(gws: GameWithStrategies) -> dict[str, Any]:
    players = list(gws.player_names)
    return {
        "orientation": gws.orientation,
        "players": players,
        "strategies": [list(s) for s in gws.strategy_names],
        "games": {
            profile_key(gws, x): game_entries(g, players)
            for x, g in zip(gws.profiles(), gws.table)
        },
    }


def game_to_document(g: TUGame, players: Sequence[str] | None = None) -> dict[str, Any]:
    names = list(players) if players else [str(i + 1) for i in range(g.n)]
    return {"orientation": g.orientation, "players": names, "game": game_entries(g, names)}


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_instance(gws: GameWithStrategies, path: str | Path) -> None:
    Path(path).write_text(dumps(instance_to_document(gws)), encoding="utf-8")
