from fractions import Fraction as F

import pytest

from tustrat import (
    GameWithStrategies,
    delete_strategy,
    from_function,
    game_at,
    guarantee_game,
    is_weakly_dominated,
    is_weakly_dominated_threat,
    make_game,
    merge_coalition,
)
from tustrat.strategic import (
    SIZE_GUARD_ENV,
    size_guard,
    threat_replacements,
    weak_dominator,
    worst_completion,
)
from tustrat.tugame import table_values

P1, P2, P3 = 0b001, 0b010, 0b100


def test_game_at_and_profile_order(load):
    heirs = load("heirs")
    assert heirs.strategy_counts == (2, 2, 2)
    assert heirs.strategy_names[2] == ("NR", "R")
    g = game_at(heirs, (1, 1, 0))
    assert g[P1 | P2] == F(5, 2) and g[P3] == F(-1, 4)
    assert heirs.index((1, 1, 0)) == 6
    assert heirs.profile(6) == (1, 1, 0)
    assert list(heirs.profiles())[:2] == [(0, 0, 0), (0, 0, 1)]


def test_index_validation(load):
    heirs = load("heirs")
    with pytest.raises(IndexError):
        heirs.index((0, 2, 0))
    with pytest.raises(ValueError):
        heirs.index((0, 0))


def test_default_names():
    gws = from_function((1, 2), lambda x: make_game(2, "value", {3: x[1]}))
    assert gws.player_names == ("1", "2")
    assert gws.strategy_names == (("s1",), ("s1", "s2"))


def test_constructor_rejects_bad_tables():
    g2 = make_game(2)
    with pytest.raises(ValueError):
        GameWithStrategies((2, 1), (g2,))
    with pytest.raises(ValueError):
        GameWithStrategies((1, 1), (make_game(3),))
    with pytest.raises(ValueError):
        GameWithStrategies((2, 1), (g2, make_game(2, "cost")))
    with pytest.raises(ValueError):
        GameWithStrategies((0, 1), ())


def test_delete_strategy(load):
    heirs = load("heirs")
    red = delete_strategy(heirs, 2, 0)
    assert red.strategy_counts == (2, 2, 1)
    assert red.strategy_names[2] == ("R",)
    assert game_at(red, (1, 1, 0)) == game_at(heirs, (1, 1, 1))
    with pytest.raises(ValueError):
        delete_strategy(delete_strategy(red, 0, 0), 0, 0)


def test_dominated_strategy_heirs(load):
    heirs = load("heirs")
    # R never helps heir 3 alone; NR does at least as well at every profile
    assert weak_dominator(heirs, 2, 1, P3) == 0
    assert not is_weakly_dominated(heirs, 2, 0, P3)
    with pytest.raises(ValueError):
        is_weakly_dominated(heirs, 2, 0, P1)


def test_dominated_threat_heirs(load):
    heirs = load("heirs")
    # against {1,2}, the threat NR is never worse for them than R
    repl = threat_replacements(heirs, 2, 0, P1 | P2)
    assert repl is not None and set(repl.values()) == {1}
    assert is_weakly_dominated_threat(heirs, 2, 0, P1 | P2)
    assert not is_weakly_dominated_threat(heirs, 2, 1, P1 | P2)
    with pytest.raises(ValueError):
        is_weakly_dominated_threat(heirs, 2, 0, P3)


def test_threat_alternative_may_vary_with_profile():
    # against player 1, player 2's strategy 0 is matched by s2 when 1 plays s1
    # and by s3 when 1 plays s2, but by no single alternative at both
    worths = {(0, 0): 1, (0, 1): 0, (0, 2): 2, (1, 0): 1, (1, 1): 2, (1, 2): 0}
    gws = from_function((2, 3), lambda x: make_game(2, "value", {1: worths[x], 3: 5}))
    repl = threat_replacements(gws, 1, 0, P1)
    assert repl == {(0, 0): 1, (1, 0): 2}
    uniform = [a for a in (1, 2) if all(worths[(x, a)] <= worths[(x, 0)] for x in (0, 1))]
    assert uniform == []


@pytest.mark.parametrize("orientation, dominated, dominator", [("value", 0, 1), ("cost", 1, 0)])
def test_dominance_follows_orientation(orientation, dominated, dominator):
    # strategy 1 of player 1 always raises their stand-alone number
    gws = from_function((2, 2), lambda x: make_game(2, orientation, {1: x[0] + x[1], 3: 4}))
    assert weak_dominator(gws, 0, dominated, P1) == dominator
    assert weak_dominator(gws, 0, dominator, P1) is None


def test_merge_coalition(load):
    heirs = load("heirs")
    m = merge_coalition(heirs, P1 | P2)
    assert m.game.strategy_counts == (4, 2)
    assert m.game.player_names == ("[1&2]", "3")
    assert m.game.strategy_names[0] == ("NL/NL", "NL/L", "L/NL", "L/L")
    assert m.original_profile((3, 0)) == (1, 1, 0)
    assert m.to_merged(P3, True) == 0b11 and m.to_original(0b01) == P1 | P2
    g = game_at(m.game, (3, 0))
    assert g[0b01] == F(5, 2) and g[0b10] == F(-1, 4) and g[0b11] == F(9, 4)


def test_merge_non_contiguous(load):
    coreempty = load("coreempty")
    m = merge_coalition(coreempty, P1 | P3)
    assert m.game.player_names == ("[1&3]", "2")
    for xs in m.game.profiles():
        x = m.original_profile(xs)
        orig, merged = game_at(coreempty, x), game_at(m.game, xs)
        for M in range(1, 4):
            assert merged[M] == orig[m.to_original(M)]


def test_worst_completion(load):
    heirs = load("heirs")
    w, x = worst_completion(heirs, P3, (0, 0, 0))
    assert w == F(-1, 4) and x == (1, 1, 0)


def test_guarantee_game(load):
    gws = load("coreempty")
    ulf = guarantee_game(gws, (0, 0, 0), 10)
    assert table_values(ulf) == (1, 3, 1, 7, 6, 1, 10)
    assert guarantee_game(gws, (0, 0, 0), "21/2")[0b111] == F(21, 2)


def test_size_guard(monkeypatch):
    assert size_guard() == 1 << 20
    monkeypatch.setenv(SIZE_GUARD_ENV, "16")
    assert size_guard() == 16
    from_function((2,), lambda x: make_game(1))  # 2 x 2 = 4 fits
    with pytest.raises(ValueError, match="size guard"):
        from_function((3, 3), lambda x: make_game(2))  # 9 x 4 = 36
    monkeypatch.setenv(SIZE_GUARD_ENV, "lots")
    with pytest.raises(ValueError):
        size_guard()
