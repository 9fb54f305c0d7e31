"""Executable checks of the axioms characterizing the configuration value.

Each checker returns an :class:`AxiomVerdict`; a failing verdict carries a
witness naming the players or blocks involved and both sides of the
violated equation.  Checks enumerate coalitions and are exponential.

A *solver* is any callable ``solver(game, cfg) -> Allocation``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .game import (
    CoalitionConfiguration,
    CostGame,
    CapExceededError,
    blocks_containing,
    build_representatives,
    check_cap,
    isolate_representative,
    members,
    quotient_game,
    shrink_configuration,
    shrink_game,
    shrink_index,
)
from .values import Allocation

Solver = Callable[[CostGame, CoalitionConfiguration], Allocation]

#: Doubles detection enumerates all coalitions; kept below the general cap.
MAX_DOUBLES_PLAYERS = 16


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: str | None = None
    applicable: bool = True

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a witness is required exactly when the axiom fails")

    def __bool__(self) -> bool:
        return self.holds


def _ok(axiom: str) -> AxiomVerdict:
    return AxiomVerdict(axiom, True)


def _fail(axiom: str, witness: str) -> AxiomVerdict:
    return AxiomVerdict(axiom, False, witness)


def _not_applicable(axiom: str) -> AxiomVerdict:
    return AxiomVerdict(axiom, True, None, applicable=False)


def check_efficiency(game: CostGame, cfg: CoalitionConfiguration, alloc: Allocation) -> AxiomVerdict:
    total, grand = alloc.total(), game.grand_value()
    if total != grand:
        return _fail("EFF", f"sum of allocation {total} != c(N) = {grand}")
    return _ok("EFF")


def null_players(game: CostGame) -> list[int]:
    table = game.table()
    out = []
    for i in range(game.n):
        bit = 1 << i
        if all(table[S | bit] == table[S] for S in range(1 << game.n) if not S & bit):
            out.append(i)
    return out


def check_null_player(game: CostGame, cfg: CoalitionConfiguration, alloc: Allocation) -> AxiomVerdict:
    for i in null_players(game):
        if alloc[i] != 0:
            return _fail("NPP", f"null player {i} receives {alloc[i]}")
    return _ok("NPP")


def check_linearity(
    game1: CostGame, game2: CostGame, cfg: CoalitionConfiguration, solver: Solver, lam, mu
) -> AxiomVerdict:
    lam, mu = Fraction(lam), Fraction(mu)
    mixed = solver(game1.combine(lam, game2, mu), cfg)
    a, b = solver(game1, cfg), solver(game2, cfg)
    for i in range(game1.n):
        rhs = lam * a[i] + mu * b[i]
        if mixed[i] != rhs:
            return _fail("L", f"player {i}: psi(lam c + mu c')={mixed[i]} != {rhs}")
    return _ok("L")


def check_anonymity(
    game: CostGame, cfg: CoalitionConfiguration, solver: Solver, sigma: Sequence[int]
) -> AxiomVerdict:
    """Raises ``ValueError`` when ``sigma`` moves some block."""
    image = lambda S: sum(1 << sigma[i] for i in members(S))  # noqa: E731
    for q, b in enumerate(cfg.blocks):
        if image(b) != b:
            raise ValueError(f"sigma does not map block {q} onto itself")
    moved = solver(game.permuted(sigma), cfg)
    base = solver(game, cfg)
    for i in range(game.n):
        if moved[i] != base[sigma[i]]:
            return _fail("A", f"player {i}: psi(sigma c)={moved[i]} != psi_sigma(i)={base[sigma[i]]}")
    return _ok("A")


def check_coalitional_symmetry(
    game: CostGame, partition: CoalitionConfiguration, alloc: Allocation
) -> AxiomVerdict:
    if not partition.is_partition:
        raise ValueError("coalitional symmetry is stated for partitions only")
    blocks = partition.blocks
    m = len(blocks)
    check_cap(m, "blocks")
    for p in range(m):
        for q in range(p + 1, m):
            rest = [r for r in range(m) if r not in (p, q)]
            symmetric = True
            for W in range(1 << len(rest)):
                A = 0
                for k, r in enumerate(rest):
                    if W >> k & 1:
                        A |= blocks[r]
                if game(blocks[p] | A) != game(blocks[q] | A):
                    symmetric = False
                    break
            if not symmetric:
                continue
            tp = sum((alloc[i] for i in members(blocks[p])), Fraction(0))
            tq = sum((alloc[i] for i in members(blocks[q])), Fraction(0))
            if tp != tq:
                return _fail("CS", f"symmetric blocks {p},{q} receive {tp} and {tq}")
    return _ok("CS")


def are_doubles(game: CostGame, cfg: CoalitionConfiguration, i: int, j: int) -> bool:
    """Interchangeable in cost, and no block of ``i`` reappears with ``j`` swapped in or added."""
    if i == j:
        return False
    if game.n > MAX_DOUBLES_PLAYERS:
        raise CapExceededError(f"doubles detection is capped at {MAX_DOUBLES_PLAYERS} players")
    bi, bj = 1 << i, 1 << j
    table = game.table()
    for S in range(1 << game.n):
        if table[S | bi] != table[S | bj]:
            return False
    blocks = set(cfg.blocks)
    for b in cfg.blocks:
        if b & bi and not b & bj:
            S = b & ~bi
            if (S | bj) in blocks or (S | bi | bj) in blocks:
                return False
    return True


def check_merger(
    game: CostGame, cfg: CoalitionConfiguration, i: int, j: int, solver: Solver
) -> AxiomVerdict:
    """Merger: folding a double ``j`` into ``i`` leaves everyone else's value unchanged.

    Not applicable unless ``i, j`` are doubles lying in no common block.
    """
    if not are_doubles(game, cfg, i, j):
        return _not_applicable("M")
    if set(blocks_containing(cfg, i)) & set(blocks_containing(cfg, j)):
        return _not_applicable("M")
    before = solver(game, cfg)
    after = solver(shrink_game(game, i, j), shrink_configuration(cfg, i, j))
    for k in range(game.n):
        if k in (i, j):
            continue
        if before[k] != after[shrink_index(k, j)]:
            return _fail("M", f"player {k}: {before[k]} before merging {j} into {i}, "
                              f"{after[shrink_index(k, j)]} after")
    return _ok("M")


def check_add_r(game: CostGame, cfg: CoalitionConfiguration, solver: Solver) -> AxiomVerdict:
    rg = build_representatives(game, cfg)
    check_cap(rg.size, "representatives")
    direct = solver(game, cfg)
    lifted = solver(rg.base, rg.partition)
    for i in range(game.n):
        rhs = sum((lifted[r] for r in rg.representatives_of(i)), Fraction(0))
        if direct[i] != rhs:
            return _fail("ADD-R", f"player {i}: {direct[i]} != sum over representatives {rhs}")
    return _ok("ADD-R")


def check_bc_cc(
    game: CostGame, cfg: CoalitionConfiguration, solver: Solver, i: int, j: int
) -> AxiomVerdict:
    """Balanced contributions for players sharing exactly the same blocks."""
    shared = blocks_containing(cfg, i)
    if shared != blocks_containing(cfg, j):
        raise ValueError(f"players {i} and {j} do not belong to the same blocks")
    direct = solver(game, cfg)
    lhs = direct[i] - direct[j]
    if i == j:
        return _ok("BC-CC") if lhs == 0 else _fail("BC-CC", f"psi_i - psi_i = {lhs}")
    rg = build_representatives(game, cfg)
    check_cap(rg.size, "representatives")
    rhs = Fraction(0)
    for q in shared:
        without_j = solver(rg.base, isolate_representative(rg, j, q))
        without_i = solver(rg.base, isolate_representative(rg, i, q))
        rhs += without_j[rg.rep_index[(i, q)]] - without_i[rg.rep_index[(j, q)]]
    if lhs != rhs:
        return _fail("BC-CC", f"players {i},{j}: difference {lhs} != isolated sum {rhs}")
    return _ok("BC-CC")


def check_cq(game: CostGame, cfg: CoalitionConfiguration, solver: Solver) -> AxiomVerdict:
    rg = build_representatives(game, cfg)
    check_cap(rg.size, "representatives")
    lifted = solver(rg.base, rg.partition)
    quotient = solver(quotient_game(game, cfg), CoalitionConfiguration.trivial(cfg.m))
    for q, b in enumerate(cfg.blocks):
        lhs = sum((lifted[rg.rep_index[(k, q)]] for k in members(b)), Fraction(0))
        if lhs != quotient[q]:
            return _fail("CQ", f"block {q}: representatives sum {lhs} != quotient share {quotient[q]}")
    return _ok("CQ")


__all__ = [
    "AxiomVerdict",
    "MAX_DOUBLES_PLAYERS",
    "are_doubles",
    "check_add_r",
    "check_anonymity",
    "check_bc_cc",
    "check_coalitional_symmetry",
    "check_cq",
    "check_efficiency",
    "check_linearity",
    "check_merger",
    "check_null_player",
    "null_players",
]
