"""Random instances and slow, independent oracles shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from math import factorial

from airportfees.airport import AirportProblem
from airportfees.game import CoalitionConfiguration, CostGame, members


def random_problem(
    rng: random.Random,
    max_movements: int = 8,
    max_types: int = 4,
    max_airlines: int = 4,
    overlap: float = 0.3,
    partition: bool = False,
) -> AirportProblem:
    """Each movement gets one owner; every other airline joins it with probability ``overlap``."""
    n = rng.randint(1, max_movements)
    T = rng.randint(1, max_types)
    costs, c = [], Fraction(0)
    for _ in range(T):
        # ties and zero increments included on purpose
        c += Fraction(rng.choice([0, 1, 2, 3, 5, 7, 10]), rng.choice([1, 1, 2, 3]))
        costs.append(c)
    A = rng.randint(1, max_airlines)
    names = [f"a{k}" for k in range(A)]
    movements = []
    for i in range(n):
        owner = rng.randrange(A)
        airlines = {owner}
        if not partition:
            airlines |= {a for a in range(A) if a != owner and rng.random() < overlap}
        movements.append((f"m{i}", f"t{rng.randrange(T)}", [names[a] for a in sorted(airlines)]))
    return AirportProblem.from_movements([(f"t{t}", costs[t]) for t in range(T)], movements)


def random_game(rng: random.Random, n: int) -> CostGame:
    values = [Fraction(0)] + [Fraction(rng.randint(-20, 40), rng.choice([1, 2, 3, 5])) for _ in range((1 << n) - 1)]
    return CostGame.from_table(values)


def random_configuration(rng: random.Random, n: int, max_blocks: int = 4, partition: bool = False):
    m = rng.randint(1, max_blocks)
    blocks = [0] * m
    for i in range(n):
        owner = rng.randrange(m)
        blocks[owner] |= 1 << i
        if not partition:
            for q in range(m):
                if q != owner and rng.random() < 0.3:
                    blocks[q] |= 1 << i
    return CoalitionConfiguration(tuple(b for b in blocks if b), n)


def shapley_by_orders(game: CostGame) -> list[Fraction]:
    """Average marginal cost over all n! arrival orders."""
    n = game.n
    out = [Fraction(0)] * n
    for order in permutations(range(n)):
        S = 0
        for i in order:
            out[i] += game(S | 1 << i) - game(S)
            S |= 1 << i
    return [x / factorial(n) for x in out]


def owen_by_orders(game: CostGame, partition: CoalitionConfiguration) -> list[Fraction]:
    """Average marginal cost over orders that keep every union contiguous."""
    n = game.n
    out = [Fraction(0)] * n
    count = 0
    blocks = [members(b) for b in partition.blocks]
    for block_order in permutations(range(len(blocks))):
        inner_orders = [list(permutations(blocks[q])) for q in block_order]

        def walk(k, prefix):
            nonlocal count
            if k == len(inner_orders):
                count += 1
                S = 0
                for i in prefix:
                    out[i] += game(S | 1 << i) - game(S)
                    S |= 1 << i
                return
            for inner in inner_orders[k]:
                walk(k + 1, prefix + list(inner))

        walk(0, [])
    return [x / count for x in out]


def configuration_by_formula(game: CostGame, cfg: CoalitionConfiguration) -> list[Fraction]:
    """Naive double sum over block subsets and within-block subsets, no bucketing."""
    n, m = game.n, cfg.m
    out = [Fraction(0)] * n
    for i in range(n):
        for q in cfg.blocks_containing(i):
            others = [r for r in range(m) if r != q]
            b = bin(cfg.blocks[q]).count("1")
            inside = [k for k in members(cfg.blocks[q]) if k != i]
            for W in range(1 << len(others)):
                chosen = [others[k] for k in range(len(others)) if W >> k & 1]
                union = 0
                for r in chosen:
                    union |= cfg.blocks[r]
                if union >> i & 1:
                    continue
                cw = Fraction(factorial(len(chosen)) * factorial(m - len(chosen) - 1), factorial(m))
                for V in range(1 << len(inside)):
                    S = sum(1 << inside[k] for k in range(len(inside)) if V >> k & 1)
                    s = bin(S).count("1")
                    sw = Fraction(factorial(s) * factorial(b - s - 1), factorial(b))
                    out[i] += cw * sw * (game(union | S | 1 << i) - game(union | S))
    return out


def with_double(rng: random.Random, p: AirportProblem) -> tuple[AirportProblem, int, int]:
    """Append a copy ``j`` of a random movement ``i`` flown by airlines that do not fly ``i``."""
    i = rng.randrange(p.n)
    mine = set(p.airlines_of(i))
    free = [p.airline_names[a] for a in range(len(p.airline_names)) if a not in mine]
    k = rng.randint(0, len(free))
    airlines = rng.sample(free, k) or [f"new{p.n}"]
    movements = [
        (p.movement_ids[m], p.types[p.movement_types[m]].code, [p.airline_names[a] for a in p.airlines_of(m)])
        for m in range(p.n)
    ]
    movements.append((f"copy{i}", p.types[p.movement_types[i]].code, sorted(airlines)))
    q = AirportProblem.from_movements([(t.code, t.cost) for t in p.types], movements, p.airline_names)
    return q, i, q.n - 1
