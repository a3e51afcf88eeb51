"""
Secure worth of three small strategic situations
================================================

Each coalition is credited with what it can guarantee whatever the
outsiders do. The resulting TU-game is then split with the Shapley value.
"""
from pathlib import Path

from tustrat import load_instance, make_game, maxmin, minmax, shapley
from tustrat.documents import game_entries
from tustrat.tugame import format_rational

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def show(title, game, names):
    print(title)
    for key, worth in game_entries(game, names).items():
        print(f"  {key:>6}: {worth}")


# %%
# Heirs. Heirs 1 and 2 may litigate (L) and heir 3 may react (R); litigation
# costs everybody a quarter million.
heirs = load_instance(FIXTURES / "heirs.json")
secured = maxmin(heirs)
show("heirs, secure worths", secured.game, heirs.player_names)

# %%
# Heirs 1 and 2 together guarantee one million by litigating. Heir 3 alone
# cannot stop the others from litigating, so its secure worth is -1/4 rather
# than the 0 an informal reading suggests.
print("witness for {3}:", secured.witness[0b100])
print("shapley of the secure-worth game:", fmt(shapley(secured.game)))

agreement = make_game(3, "value", {0b011: 1, 0b111: 3})
print("shapley with {3} rounded up to 0:", fmt(shapley(agreement)))

# %%
# Subsidy. A cost family: company 1 decides whether to apply for a subsidy,
# and each coalition pays the least cost it can guarantee.
subsidy = load_instance(FIXTURES / "subsidy.json")
costs = minmax(subsidy).game
show("subsidy, secure costs", costs, subsidy.player_names)
print("shapley:", fmt(shapley(costs)))

# %%
# Parliament. Party 2 chooses whom to ally with; only winning coalitions
# are worth 1.
parliament = load_instance(FIXTURES / "parliament.json")
votes = maxmin(parliament).game
show("parliament, secure worths", votes, parliament.player_names)
print("shapley:", fmt(shapley(votes)))
