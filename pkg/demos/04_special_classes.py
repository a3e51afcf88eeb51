"""
Airport and simple families
===========================

Airport families have a cheap sufficient condition for a nonempty core,
and simple families have an exact one in terms of veto threats.
"""
from pathlib import Path

from tustrat import (
    airport_sufficient_condition,
    core_membership,
    core_nonempty,
    load_instance,
    maxmin,
    minmax,
    most_costly_player,
    simple_core_characterization,
)
from tustrat.tugame import format_rational, table_values

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"

# %%
# In the subsidy family player 3 needs the longest runway at every profile.
# Its secure costs never drop below the grand-coalition cost, which yields
# an airport game below the secure costs with the same total.
subsidy = load_instance(FIXTURES / "subsidy.json")
costs = minmax(subsidy).game
cond = airport_sufficient_condition(costs)
print("most costly player:", subsidy.player_names[most_costly_player(subsidy)])
print("pivot:", subsidy.player_names[cond.pivot], "runway costs:", fmt(cond.costs))
ok, allocation = core_nonempty(cond.minorant)
print("core point of the airport game:", fmt(allocation))
print("also in the secure-cost core:", core_membership(costs, allocation))

# %%
# The condition is sufficient only: this family has no pivot but a
# nonempty core all the same.
suff = load_instance(FIXTURES / "suff.json")
costs = minmax(suff).game
print("secure costs:", fmt(table_values(costs)))
print("pivot found:", airport_sufficient_condition(costs).holds)
print("(0,3,5) in core:", core_membership(costs, (0, 3, 5)))

# %%
# A simple family has a balanced secure-worth game exactly when some player
# can make themself a veto player against every reply of the others.
parliament = load_instance(FIXTURES / "parliament.json")
found, player = simple_core_characterization(parliament)
print("veto threat:", found, "by player", parliament.player_names[player])
print("balanced:", core_nonempty(maxmin(parliament).game)[0])
