import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from airportfees.airport import AirportProblem, airport_game, example_problem
from airportfees.axioms import (
    AxiomVerdict,
    are_doubles,
    check_add_r,
    check_anonymity,
    check_bc_cc,
    check_coalitional_symmetry,
    check_cq,
    check_efficiency,
    check_linearity,
    check_merger,
    check_null_player,
    null_players,
)
from airportfees.game import CoalitionConfiguration, CostGame, quotient_game
from airportfees.values import Allocation, configuration_value, shapley

from helpers import random_configuration, random_game, random_problem, with_double

F = Fraction
seeds = st.integers(0, 2**32 - 1)


def _perturb(alloc, i=0, by=1):
    values = list(alloc)
    values[i] += by
    return Allocation(tuple(values), "perturbed")


def _example():
    p = example_problem()
    return airport_game(p), p.configuration


def test_verdict_requires_witness_on_failure():
    with pytest.raises(ValueError):
        AxiomVerdict("EFF", False)
    with pytest.raises(ValueError):
        AxiomVerdict("EFF", True, "x")
    assert not AxiomVerdict("EFF", False, "x")


def test_efficiency_on_example():
    g, cfg = _example()
    alloc = configuration_value(g, cfg)
    assert check_efficiency(g, cfg, alloc)
    bad = check_efficiency(g, cfg, _perturb(alloc))
    assert not bad and "c(N) = 22" in bad.witness
    zero = CostGame(2, lambda S: F(0))
    assert check_efficiency(zero, CoalitionConfiguration.trivial(2), Allocation((F(0), F(0)), "x"))


def test_null_player_dummy_movement():
    # a zero-cost type leaves every coalition's cost unchanged
    p = AirportProblem.from_movements(
        [("free", 0), ("s", 3), ("l", 8)],
        [("d", "free", ["A"]), ("x", "s", ["A", "B"]), ("y", "l", ["B"])],
    )
    g = airport_game(p)
    assert null_players(g) == [0]
    alloc = configuration_value(g, p.configuration)
    assert alloc[0] == 0 and check_null_player(g, p.configuration, alloc)
    assert not check_null_player(g, p.configuration, _perturb(alloc, 0))
    # no null players: vacuous
    g2, cfg2 = _example()
    assert null_players(g2) == [] and check_null_player(g2, cfg2, _perturb(configuration_value(g2, cfg2)))


def test_linearity_trivial_cases():
    g, cfg = _example()
    assert check_linearity(g, g, cfg, configuration_value, 1, 0)
    assert check_linearity(g, g, cfg, configuration_value, 1, 1)

    def skewed(game, cfg):
        alloc = configuration_value(game, cfg)
        return _perturb(alloc, 0, 1) if game(1) == 10 else alloc

    assert not check_linearity(g, g, cfg, skewed, 1, 1)


def test_anonymity():
    p = AirportProblem.from_movements(
        [("s", 2), ("l", 5)],
        [("x", "s", ["A", "B"]), ("y", "s", ["A", "B"]), ("z", "l", ["B"])],
    )
    g, cfg = airport_game(p), p.configuration
    assert check_anonymity(g, cfg, configuration_value, [0, 1, 2])
    assert check_anonymity(g, cfg, configuration_value, [1, 0, 2])
    alloc = configuration_value(g, cfg)
    assert alloc[0] == alloc[1]
    with pytest.raises(ValueError):
        check_anonymity(g, cfg, configuration_value, [2, 1, 0])

    def biased(game, cfg):
        return _perturb(configuration_value(game, cfg), 0, 1 if game(1) != game(2) else 0)

    uneven = CostGame.from_table([0, 1, 2, 3, 4, 5, 6, 7])
    cfg3 = CoalitionConfiguration.grand(3)
    assert not check_anonymity(uneven, cfg3, biased, [1, 0, 2])


def test_coalitional_symmetry():
    # two airlines each flying one small and one large movement
    p = AirportProblem.from_movements(
        [("s", 2), ("l", 5)],
        [("x", "s", ["A"]), ("y", "l", ["A"]), ("u", "s", ["B"]), ("v", "l", ["B"])],
    )
    g, cfg = airport_game(p), p.configuration
    alloc = configuration_value(g, cfg)
    assert check_coalitional_symmetry(g, cfg, alloc)
    assert not check_coalitional_symmetry(g, cfg, _perturb(alloc))
    lone = CoalitionConfiguration.grand(4)
    assert check_coalitional_symmetry(g, lone, _perturb(alloc))  # no pair to compare
    with pytest.raises(ValueError):
        check_coalitional_symmetry(*_example(), alloc)


def test_doubles_on_small_airport():
    p = AirportProblem.from_movements(
        [("s", 2), ("l", 5)],
        [("x", "s", ["A"]), ("y", "s", ["B"]), ("z", "l", ["C"]), ("w", "l", ["A"])],
    )
    g, cfg = airport_game(p), p.configuration
    assert are_doubles(g, cfg, 0, 1)
    assert not are_doubles(g, cfg, 0, 2)
    assert check_merger(g, cfg, 0, 1, configuration_value)
    assert not check_merger(g, cfg, 0, 2, configuration_value).applicable


def test_merger_witness_for_shapley_ignoring_structure():
    # Shapley ignores the blocks, so merging j into i changes third parties
    p = AirportProblem.from_movements(
        [("s", 2), ("l", 5)],
        [("x", "s", ["A"]), ("y", "s", ["B"]), ("z", "l", ["C"]), ("w", "l", ["A"])],
    )
    g, cfg = airport_game(p), p.configuration
    verdict = check_merger(g, cfg, 0, 1, lambda game, c: shapley(game))
    assert verdict.applicable and not verdict.holds and "player 2" in verdict.witness


def test_add_r_and_cq_on_example():
    g, cfg = _example()
    assert check_add_r(g, cfg, configuration_value)
    assert check_cq(g, cfg, configuration_value)
    single = CoalitionConfiguration.grand(4)
    assert check_cq(g, single, configuration_value)
    # block a1's representatives carry 10/3, its quotient Shapley share
    assert shapley(quotient_game(g, cfg))[0] == F(10, 3)


def test_bc_cc():
    p = AirportProblem.from_movements(
        [("s", 2), ("l", 5)],
        [("x", "s", ["A", "B"]), ("y", "l", ["A", "B"]), ("z", "l", ["B"])],
    )
    g, cfg = airport_game(p), p.configuration
    assert check_bc_cc(g, cfg, configuration_value, 0, 1)
    assert check_bc_cc(g, cfg, configuration_value, 0, 0)
    with pytest.raises(ValueError):
        check_bc_cc(g, cfg, configuration_value, 0, 2)

    def tilted(game, c):
        alloc = configuration_value(game, c)
        return _perturb(alloc, 0) if c == cfg else alloc

    assert not check_bc_cc(g, cfg, tilted, 0, 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_all_axioms_on_random_games(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    g, cfg = random_game(rng, n), random_configuration(rng, n, max_blocks=3)
    alloc = configuration_value(g, cfg)
    assert check_efficiency(g, cfg, alloc)
    assert check_null_player(g, cfg, alloc)
    assert check_add_r(g, cfg, configuration_value)
    assert check_cq(g, cfg, configuration_value)
    for i in range(n):
        for j in range(n):
            if cfg.blocks_containing(i) == cfg.blocks_containing(j):
                assert check_bc_cc(g, cfg, configuration_value, i, j)
    part = random_configuration(rng, n, partition=True)
    assert check_coalitional_symmetry(g, part, configuration_value(g, part))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_merger_on_constructed_doubles(seed):
    rng = random.Random(seed)
    q, i, j = with_double(rng, random_problem(rng, max_movements=6))
    g = airport_game(q)
    verdict = check_merger(g, q.configuration, i, j, configuration_value)
    assert verdict.holds
