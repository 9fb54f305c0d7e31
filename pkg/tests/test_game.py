from fractions import Fraction

import pytest

from airportfees.game import (
    CapExceededError,
    Coalition,
    CoalitionConfiguration,
    CostGame,
    blocks_containing,
    build_representatives,
    isolate_representative,
    members,
    merge_blocks,
    quotient_game,
    shrink_configuration,
    shrink_game,
    shrink_index,
)
from airportfees.airport import airport_game, example_problem


def test_members_and_coalition():
    assert members(0b10110) == [1, 2, 4]
    S = Coalition.of([0, 2], 3)
    assert 2 in S and 1 not in S
    assert list(S | Coalition.of([1], 3)) == [0, 1, 2]
    assert len(Coalition.grand(3)) == 3
    with pytest.raises(ValueError):
        Coalition(0b1000, 3)


def test_game_requires_zero_empty_cost():
    with pytest.raises(ValueError):
        CostGame(2, lambda S: 1)


def test_from_table_and_call():
    g = CostGame.from_table([0, 1, 2, 3])
    assert g(0b11) == 3 and g(Coalition.of([1], 2)) == 2
    with pytest.raises(ValueError):
        CostGame.from_table([0, 1, 2])


def test_table_cap():
    g = CostGame(30, lambda S: 0)
    with pytest.raises(CapExceededError):
        g.table()


def test_combine_and_permute():
    g = CostGame.from_table([0, 1, 2, 4])
    h = CostGame.from_table([0, 3, 0, 3])
    mix = g.combine(2, h, Fraction(1, 3))
    assert mix(0b01) == 3 and mix(0b11) == 9
    swapped = g.permuted([1, 0])
    assert swapped(0b01) == 2 and swapped(0b10) == 1


def test_configuration_validation():
    with pytest.raises(ValueError):
        CoalitionConfiguration((0b01, 0), 2)  # empty block
    with pytest.raises(ValueError):
        CoalitionConfiguration((0b01,), 2)  # player 1 uncovered
    cfg = CoalitionConfiguration.from_sets([[0], [1, 2], [2]], 3)
    assert not cfg.is_partition
    assert blocks_containing(cfg, 2) == [1, 2]
    assert CoalitionConfiguration.trivial(3).is_partition
    assert CoalitionConfiguration.grand(3).blocks == (0b111,)
    with pytest.raises(IndexError):
        blocks_containing(cfg, 3)


def test_representatives_of_example():
    p = example_problem()
    rg = build_representatives(airport_game(p), p.configuration)
    # movement 2 (index 1) is in both a2 and a3
    assert rg.size == 5
    assert rg.partition.is_partition
    assert len(rg.representatives_of(1)) == 2
    copies = 1 << rg.rep_index[(1, 1)] | 1 << rg.rep_index[(1, 2)]
    assert rg.project(copies) == 0b10
    assert rg.base(1 << rg.rep_index[(2, 1)]) == 22


def test_isolate_representative():
    p = example_problem()
    rg = build_representatives(airport_game(p), p.configuration)
    cfg = isolate_representative(rg, 1, 1)
    assert cfg.m == rg.partition.m + 1
    assert cfg.is_partition
    single = [b for b in cfg.blocks if b == 1 << rg.rep_index[(1, 1)]]
    assert single
    # a representative already alone stays put
    assert isolate_representative(rg, 0, 0) == rg.partition
    with pytest.raises(ValueError):
        isolate_representative(rg, 0, 1)


def test_quotient_game_of_example():
    p = example_problem()
    q = quotient_game(airport_game(p), p.configuration)
    assert [q(W) for W in range(8)] == [0, 10, 22, 22, 20, 20, 22, 22]


def test_merge_blocks():
    cfg = CoalitionConfiguration.from_sets([[0], [1], [2], [1, 3]], 4)
    merged = merge_blocks(cfg, [3, 1])
    assert merged.blocks == (0b0001, 0b1010, 0b0100)
    with pytest.raises(ValueError):
        merge_blocks(cfg, [])
    with pytest.raises(IndexError):
        merge_blocks(cfg, [7])


def test_shrink():
    g = CostGame.from_table(list(range(8)))  # c(S) = S as an integer
    s = shrink_game(g, 0, 1)
    assert s.n == 2
    assert s(0b01) == g(0b011)  # player 0 brings j along
    assert s(0b10) == g(0b100)  # old player 2 is now 1
    assert shrink_index(2, 1) == 1 and shrink_index(0, 1) == 0
    with pytest.raises(ValueError):
        shrink_game(g, 1, 1)
    cfg = CoalitionConfiguration.from_sets([[0], [1, 2]], 3)
    assert shrink_configuration(cfg, 0, 1).as_sets() == [[0], [0, 1]]
