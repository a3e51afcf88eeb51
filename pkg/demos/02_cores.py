"""
Cores of secure-worth games
===========================

Balanced inputs need not give a balanced secure-worth game, and convex
inputs need not give a convex one. The core is always the intersection of
the cores of the guarantee games, one per strategy profile.
"""
from pathlib import Path

from tustrat import (
    core_membership,
    core_nonempty,
    core_vertices,
    guarantee_game,
    is_convex,
    load_instance,
    maxmin,
)
from tustrat.tugame import format_rational, table_values

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"

# %%
# Two balanced table games whose secure-worth game has an empty core.
gws = load_instance(FIXTURES / "coreempty.json")
print("table games balanced:", [core_nonempty(g)[0] for g in gws.table])
secured = maxmin(gws).game
print("secure worths (1,2,3,12,13,23,N):", fmt(table_values(secured)))
print("balanced:", core_nonempty(secured)[0])

# %%
# The guarantee game at a profile keeps that profile for every coalition and
# lets outsiders deviate. Its core vertices come from exact vertex
# enumeration.
top = secured[secured.grand]
for x in gws.profiles():
    g = guarantee_game(gws, x, top)
    name = ",".join(gws.strategy_names[i][s] for i, s in enumerate(x))
    vertices = " ".join(fmt(v) for v in sorted(core_vertices(g)))
    print(f"{name}: {fmt(table_values(g))}  vertices {vertices}")

# %%
# Convexity is not inherited, although (3,2,4) is still a core point of the
# secure-worth game and of every guarantee game.
gws = load_instance(FIXTURES / "nonconvex.json")
secured = maxmin(gws).game
print("inputs convex:", [is_convex(g) for g in gws.table])
print("secure worths:", fmt(table_values(secured)), "convex:", is_convex(secured))
print("(3,2,4) in core:", core_membership(secured, (3, 2, 4)))
top = secured[secured.grand]
print(
    "(3,2,4) in every guarantee core:",
    all(core_membership(guarantee_game(gws, x, top), (3, 2, 4)) for x in gws.profiles()),
)
