"""Runway fee allocation for airports with code-shared movements.

Fees follow the Shapley value, the Owen value for disjoint airline
blocks, and the configuration value when one movement may belong to
several airlines.  Everything is computed in exact rationals.
"""

from .airport import (
    AircraftType,
    AirportProblem,
    ConfigurationError,
    FeeReport,
    airline_totals,
    airport_game,
    coarsen,
    configuration_closed,
    costs_from_weights,
    example_problem,
    incidence_fees,
    merge_airlines,
    owen_closed,
    shapley_closed,
)
from .dataset import DatasetError, DatasetFile, bundled_path, parse_dataset, read_dataset
from .game import (
    CapExceededError,
    Coalition,
    CoalitionConfiguration,
    CostGame,
    build_representatives,
    quotient_game,
)
from .values import (
    Allocation,
    configuration_value,
    configuration_value_via_representatives,
    owen,
    shapley,
)

__version__ = "0.1.0"

__all__ = [
    "AircraftType",
    "AirportProblem",
    "Allocation",
    "CapExceededError",
    "Coalition",
    "CoalitionConfiguration",
    "ConfigurationError",
    "CostGame",
    "DatasetError",
    "DatasetFile",
    "FeeReport",
    "airline_totals",
    "airport_game",
    "build_representatives",
    "bundled_path",
    "coarsen",
    "configuration_closed",
    "configuration_value",
    "configuration_value_via_representatives",
    "costs_from_weights",
    "example_problem",
    "incidence_fees",
    "merge_airlines",
    "owen",
    "owen_closed",
    "parse_dataset",
    "quotient_game",
    "read_dataset",
    "shapley",
    "shapley_closed",
]
