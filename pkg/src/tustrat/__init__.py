"""Exact tools for TU-games with strategies.

Transforms a family of profile-dependent TU-games into one TU-game through
the maxmin, minmax or maxmax procedures, and studies the result with the
Shapley value, the core and property checks.
"""
from .classes import (
    AirportCondition,
    airport_sufficient_condition,
    is_airport_family,
    is_simple_family,
    most_costly_player,
    simple_core_characterization,
)
from .core import core_membership, core_nonempty, core_vertices
from .documents import InstanceError, load_game, load_instance, save_instance
from .generate import generate_instance, sample_allocations
from .procedures import (
    TransformResult,
    check_axioms,
    check_core_intersection,
    check_individual_objectivity,
    check_irrelevance_dominated_strategies,
    check_irrelevance_dominated_threats,
    check_merge_invariance,
    check_monotonicity_axiom,
    check_monotonicity_transmission,
    check_superadditivity_transmission,
    maxmax,
    maxmin,
    minmax,
    transform,
)
from .strategic import (
    GameWithStrategies,
    MergedGame,
    delete_strategy,
    from_function,
    game_at,
    guarantee_game,
    is_weakly_dominated,
    is_weakly_dominated_threat,
    merge_coalition,
)
from .tugame import (
    TUGame,
    airport_from_costs,
    game_from_sequence,
    is_convex,
    is_monotone,
    is_simple,
    is_superadditive,
    is_veto,
    make_game,
    negate,
    shapley,
)

__version__ = "0.1.0"
