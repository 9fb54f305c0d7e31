"""Definition-level Shapley, Owen and configuration values.

These enumerate coalitions and are exponential in the player count; they
are the reference against which the airport closed forms are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from . import _kernels
from .game import (
    CoalitionConfiguration,
    CostGame,
    blocks_containing,
    build_representatives,
    check_cap,
)

METHODS = ("shapley", "owen", "configuration", "configuration-via-representatives")


@dataclass(frozen=True)
class Allocation:
    values: tuple[Fraction, ...]
    method: str

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def shapley(game: CostGame) -> Allocation:
    n = game.n
    check_cap(n)
    if n == 0:
        return Allocation((), "shapley")
    table, denominator = game.scaled_table()
    sums = _kernels.shapley_sums(table, n)
    weights = [factorial(s) * factorial(n - s - 1) for s in range(n)]
    scale = factorial(n) * denominator
    values = tuple(
        Fraction(sum(weights[s] * int(sums[i][s]) for s in range(n)), scale)
        for i in range(n)
    )
    return Allocation(values, "shapley")


def _configuration_allocation(game: CostGame, cfg: CoalitionConfiguration, method: str):
    n, m = game.n, cfg.m
    if cfg.n != n:
        raise ValueError("configuration and game have different player counts")
    check_cap(n)
    check_cap(m, "blocks")
    if n == 0:
        return Allocation((), method)
    table, denominator = game.scaled_table()
    sums = _kernels.configuration_sums(table, n, cfg.blocks)
    union_weight = [factorial(c) * factorial(m - c - 1) for c in range(m)]
    values = []
    for i in range(n):
        value = Fraction(0)
        for q in blocks_containing(cfg, i):
            b = cfg.blocks[q].bit_count()
            bucket = sums[i][q]
            acc = 0
            for c in range(m):
                row = bucket[c]
                inner = 0
                for s in range(1, b + 1):
                    inner += factorial(s - 1) * factorial(b - s) * int(row[s])
                acc += union_weight[c] * inner
            value += Fraction(acc, factorial(m) * factorial(b))
        values.append(value / denominator)
    return Allocation(tuple(values), method)


def owen(game: CostGame, partition: CoalitionConfiguration) -> Allocation:
    """Owen value for a system of a priori unions.

    Raises:
        ValueError: if ``partition`` has overlapping blocks.
    """
    if not partition.is_partition:
        raise ValueError("the Owen value needs disjoint unions; use configuration_value")
    return _configuration_allocation(game, partition, "owen")


def configuration_value(game: CostGame, cfg: CoalitionConfiguration) -> Allocation:
    """Configuration value of ``(N, c, cfg)``, summing over each block of a player.

    Block subsets are indexed by position, so a block that repeats another
    as a set is still a separate union.
    """
    return _configuration_allocation(game, cfg, "configuration")


def configuration_value_via_representatives(
    game: CostGame, cfg: CoalitionConfiguration
) -> Allocation:
    """Configuration value as summed Owen shares of each player's representatives."""
    rg = build_representatives(game, cfg)
    check_cap(rg.size, "representatives")
    ow = owen(rg.base, rg.partition)
    values = [Fraction(0)] * game.n
    for r, (i, _) in enumerate(rg.origin):
        values[i] += ow[r]
    return Allocation(tuple(values), "configuration-via-representatives")
