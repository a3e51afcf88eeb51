"""
Axioms and inherited properties on random families
==================================================

The secure-worth procedure is checked against its five characterising
axioms, and the optimistic maxmax procedure is shown to fail where it
should.
"""
from collections import Counter
from pathlib import Path

from tustrat import (
    check_axioms,
    check_monotonicity_transmission,
    check_superadditivity_transmission,
    core_nonempty,
    generate_instance,
    is_superadditive,
    load_instance,
    maxmax,
)
from tustrat.tugame import format_rational, table_values

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"

# %%
# Axiom verdicts over 60 generated families of each class.
for kind in ("general", "superadditive", "monotone", "simple", "airport"):
    tally = Counter()
    for seed in range(1, 61):
        verdicts = check_axioms(generate_instance(seed, 1 + seed % 3, 3, kind))
        tally.update(name for name, ok in verdicts.items() if ok)
    print(f"{kind:>13}: {dict(tally)}")

# %%
# Superadditivity and monotonicity carry over to the secure-worth game.
ok = all(
    check_superadditivity_transmission(generate_instance(s, 3, 3, "superadditive"))
    and check_monotonicity_transmission(generate_instance(s, 3, 3, "monotone"))
    for s in range(1, 61)
)
print("inheritance holds on 60 + 60 families:", ok)

# %%
# The optimist adds up best cases that cannot happen together.
gws = load_instance(FIXTURES / "maxmax.json")
optimistic = maxmax(gws).game
print("table games superadditive:", [is_superadditive(g) for g in gws.table])
print("maxmax (1,2,12):", fmt(table_values(optimistic)))
print("superadditive:", is_superadditive(optimistic), "balanced:", core_nonempty(optimistic)[0])
print("axioms under maxmax:", check_axioms(gws, procedure=maxmax))
