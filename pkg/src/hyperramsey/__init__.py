"""Tools for the off-diagonal hypergraph Ramsey numbers r_k(k+1, t; n).

Colorings, the builder-painter game, exhaustive verifiers and bound
calculators.  Hot scans run in a compiled extension when it is available.
"""
from .errors import CapacityError, ContractViolation, DomainError, UsageError
from .core import (BLUE, RED, Color, ColoringOracle, ConfigurationWitness, ConstantColoring,
                   FunctionColoring, TableColoring, WitnessKind, colex_compare, colex_rank,
                   colex_subsets, colex_unrank, enumerate_k_subsets, find_blue_clique,
                   find_red_configuration, find_red_F, find_red_ordered_Ft, red_count)
from .delta import BitVertex, DeltaClass, classify, delta, delta_sequence, universe
from .colorings import (BaseTwoColoring, KaryBaseColoring, RankColoring, SteinerFamily,
                        SteppingUpColoring, greedy_partial_steiner, random_base, rank_color,
                        red_probability, step_up_color, step_up_color_strong)
from .game import Game, GameOutcome, OutcomeKind, Stats, resource_bounds, run_game
from .exact import RamseyQuery, exact_ramsey, find_good_coloring
from .bounds import TowerExpr, bound_report, tower
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ContractViolation",
    "DomainError",
    "UsageError",
    "BLUE",
    "RED",
    "Color",
    "ColoringOracle",
    "ConfigurationWitness",
    "ConstantColoring",
    "FunctionColoring",
    "TableColoring",
    "WitnessKind",
    "colex_compare",
    "colex_rank",
    "colex_subsets",
    "colex_unrank",
    "enumerate_k_subsets",
    "find_blue_clique",
    "find_red_configuration",
    "find_red_F",
    "find_red_ordered_Ft",
    "red_count",
    "BitVertex",
    "DeltaClass",
    "classify",
    "delta",
    "delta_sequence",
    "universe",
    "BaseTwoColoring",
    "KaryBaseColoring",
    "RankColoring",
    "SteinerFamily",
    "SteppingUpColoring",
    "greedy_partial_steiner",
    "random_base",
    "rank_color",
    "red_probability",
    "step_up_color",
    "step_up_color_strong",
    "Game",
    "GameOutcome",
    "OutcomeKind",
    "Stats",
    "resource_bounds",
    "run_game",
    "RamseyQuery",
    "exact_ramsey",
    "find_good_coloring",
    "TowerExpr",
    "bound_report",
    "tower",
    "BACKEND",
]
