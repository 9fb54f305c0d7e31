"""Cost games, coalition configurations and the games derived from them.

Coalitions are plain ``int`` bitmasks over 0-based player indices; the
:class:`Coalition` wrapper exists for callers who want the player count
carried along.  All values are exact :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

#: Largest player count for which a game may be tabulated (2**n entries).
MAX_BRUTE_FORCE_PLAYERS = 24


class CapExceededError(ValueError):
    """Raised when a brute-force computation would exceed the player cap."""


def bits_of(players: Iterable[int]) -> int:
    mask = 0
    for p in players:
        mask |= 1 << p
    return mask


def members(mask: int) -> list[int]:
    """Ascending player indices set in ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class Coalition:
    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"coalition bits {self.bits:#x} exceed {self.n} players")

    @classmethod
    def of(cls, players: Iterable[int], n: int) -> "Coalition":
        return cls(bits_of(players), n)

    @classmethod
    def empty(cls, n: int) -> "Coalition":
        return cls(0, n)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls(full_mask(n), n)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(members(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __or__(self, other: "Coalition") -> "Coalition":
        return Coalition(self.bits | other.bits, max(self.n, other.n))

    def __repr__(self) -> str:
        return f"Coalition({set(self)!r}, n={self.n})"


def popcount(mask: int) -> int:
    return mask.bit_count()


def _as_mask(S) -> int:
    if isinstance(S, Coalition):
        return S.bits
    return S


class CostGame:
    """A characteristic function over coalitions of ``n`` players.

    ``rule`` maps an ``int`` bitmask to a number; its result is converted to
    :class:`Fraction`.  The rule is evaluated lazily; :meth:`table` fills
    the full ``2**n`` table on demand and caches it.  ``tabulate``, when
    given, must return that same table faster than ``2**n`` rule calls.
    """

    def __init__(
        self,
        n: int,
        rule: Callable[[int], object],
        name: str = "game",
        tabulate: Callable[[], Sequence[Fraction]] | None = None,
    ):
        if n < 0:
            raise ValueError("player count must be nonnegative")
        self.n = n
        self.name = name
        self._rule = rule
        self._tabulate = tabulate
        self._table: tuple[Fraction, ...] | None = None
        self._scaled: tuple[list[int], int] | None = None
        if Fraction(rule(0)) != 0:
            raise ValueError("a cost game must assign 0 to the empty coalition")

    @classmethod
    def from_table(cls, values: Sequence, name: str = "table") -> "CostGame":
        size = len(values)
        n = size.bit_length() - 1
        if size != 1 << n:
            raise ValueError(f"table length {size} is not a power of two")
        table = tuple(Fraction(v) for v in values)
        if table[0] != 0:
            raise ValueError("a cost game must assign 0 to the empty coalition")
        game = cls(n, table.__getitem__, name=name)
        game._table = table
        return game

    def __call__(self, S) -> Fraction:
        mask = _as_mask(S)
        if mask == 0:
            return Fraction(0)
        if self._table is not None:
            return self._table[mask]
        if mask >> self.n:
            raise ValueError(f"coalition {mask:#x} has players outside 0..{self.n - 1}")
        return Fraction(self._rule(mask))

    def grand_value(self) -> Fraction:
        return self(full_mask(self.n))

    def table(self) -> tuple[Fraction, ...]:
        if self._table is None:
            check_cap(self.n)
            if self._tabulate is not None:
                self._table = tuple(self._tabulate())
            else:
                self._table = (Fraction(0),) + tuple(
                    Fraction(self._rule(S)) for S in range(1, 1 << self.n)
                )
        return self._table

    def scaled_table(self) -> tuple[list[int], int]:
        """``(ints, d)`` with ``table()[S] == ints[S] / d``, ``d`` the lcm of denominators."""
        if self._scaled is None:
            table = self.table()
            # big tables repeat a few objects; keying by identity skips Fraction hashing
            distinct = {id(v): v for v in table}
            d = lcm(*(v.denominator for v in distinct.values()))
            as_int = {k: v.numerator * (d // v.denominator) for k, v in distinct.items()}
            self._scaled = ([as_int[id(v)] for v in table], d)
        return self._scaled

    def combine(self, lam, other: "CostGame", mu) -> "CostGame":
        """The game ``lam * self + mu * other``."""
        if other.n != self.n:
            raise ValueError("games must share the player set")
        lam, mu = Fraction(lam), Fraction(mu)
        return CostGame(self.n, lambda S: lam * self(S) + mu * other(S), name="combination")

    def permuted(self, sigma: Sequence[int]) -> "CostGame":
        """The game ``S -> c(sigma(S))``."""
        if sorted(sigma) != list(range(self.n)):
            raise ValueError("sigma is not a permutation of the players")

        def rule(S: int) -> Fraction:
            return self(bits_of(sigma[i] for i in members(S)))

        return CostGame(self.n, rule, name="permuted")

    def __repr__(self) -> str:
        return f"CostGame(n={self.n}, name={self.name!r})"


def check_cap(n: int, what: str = "players") -> None:
    if n > MAX_BRUTE_FORCE_PLAYERS:
        raise CapExceededError(
            f"{n} {what} exceeds the brute-force cap of {MAX_BRUTE_FORCE_PLAYERS}"
        )


@dataclass(frozen=True)
class CoalitionConfiguration:
    """A covering family of nonempty, possibly overlapping blocks.

    Blocks are bitmasks kept in input order; the position of a block is its
    identifier, so equal blocks at different positions are distinct.
    """

    blocks: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        union = 0
        for q, b in enumerate(self.blocks):
            if b <= 0:
                raise ValueError(f"block {q} is empty")
            if b >> self.n:
                raise ValueError(f"block {q} has players outside 0..{self.n - 1}")
            union |= b
        if union != full_mask(self.n):
            missing = members(full_mask(self.n) & ~union)
            raise ValueError(f"configuration does not cover players {missing}")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: int) -> "CoalitionConfiguration":
        return cls(tuple(bits_of(s) for s in sets), n)

    @classmethod
    def trivial(cls, n: int) -> "CoalitionConfiguration":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def grand(cls, n: int) -> "CoalitionConfiguration":
        return cls((full_mask(n),), n)

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def is_partition(self) -> bool:
        seen = 0
        for b in self.blocks:
            if seen & b:
                return False
            seen |= b
        return True

    def blocks_containing(self, i: int) -> list[int]:
        return blocks_containing(self, i)

    def as_sets(self) -> list[list[int]]:
        return [members(b) for b in self.blocks]


def blocks_containing(cfg: CoalitionConfiguration, i: int) -> list[int]:
    """Indices of the blocks that contain player ``i``, ascending."""
    if not 0 <= i < cfg.n:
        raise IndexError(f"player {i} out of range 0..{cfg.n - 1}")
    return [q for q, b in enumerate(cfg.blocks) if b >> i & 1]


@dataclass(frozen=True)
class RepresentativesGame:
    """One copy ``i(q)`` of each player per block ``q`` it belongs to.

    Representatives are ordered by (block index, player index).  ``base`` is
    the lifted game on representatives and ``partition`` groups the copies
    by block.
    """

    base: CostGame
    partition: CoalitionConfiguration
    rep_index: dict[tuple[int, int], int]
    origin: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.origin)

    def representatives_of(self, i: int) -> list[int]:
        return [r for r, (j, _) in enumerate(self.origin) if j == i]

    def project(self, rep_mask: int) -> int:
        """Original players having at least one representative in ``rep_mask``."""
        out = 0
        for r in members(rep_mask):
            out |= 1 << self.origin[r][0]
        return out


def build_representatives(game: CostGame, cfg: CoalitionConfiguration) -> RepresentativesGame:
    if cfg.n != game.n:
        raise ValueError("configuration and game have different player counts")
    origin = []
    for q, b in enumerate(cfg.blocks):
        origin.extend((i, q) for i in members(b))
    origin = tuple(origin)
    rep_index = {iq: r for r, iq in enumerate(origin)}
    owner = [1 << i for i, _ in origin]

    rep_blocks = [0] * cfg.m
    for r, (_, q) in enumerate(origin):
        rep_blocks[q] |= 1 << r

    def lifted(S: int) -> Fraction:
        T = 0
        r = 0
        while S:
            if S & 1:
                T |= owner[r]
            S >>= 1
            r += 1
        return game(T)

    def tabulate() -> list[Fraction]:
        check_cap(len(origin))
        values = game.table()
        proj = [0] * (1 << len(origin))
        for S in range(1, len(proj)):
            low = S & -S
            proj[S] = proj[S ^ low] | owner[low.bit_length() - 1]
        return [values[T] for T in proj]

    base = CostGame(len(origin), lifted, name=f"representatives({game.name})", tabulate=tabulate)
    partition = CoalitionConfiguration(tuple(rep_blocks), len(origin))
    return RepresentativesGame(base, partition, rep_index, origin)


def isolate_representative(rg: RepresentativesGame, k: int, p: int) -> CoalitionConfiguration:
    """Split ``k(p)`` off its block into a singleton placed right after it."""
    try:
        r = rg.rep_index[(k, p)]
    except KeyError:
        raise ValueError(f"player {k} is not a member of block {p}") from None
    bit = 1 << r
    old = rg.partition.blocks[p]
    if old == bit:
        return rg.partition
    blocks = list(rg.partition.blocks)
    blocks[p : p + 1] = [old & ~bit, bit]
    return CoalitionConfiguration(tuple(blocks), rg.partition.n)


def quotient_game(game: CostGame, cfg: CoalitionConfiguration) -> CostGame:
    """The game among blocks: ``W -> c(union of the blocks in W)``."""
    blocks = cfg.blocks

    def rule(W: int) -> Fraction:
        union = 0
        for k in members(W):
            union |= blocks[k]
        return game(union)

    return CostGame(cfg.m, rule, name=f"quotient({game.name})")


def merge_blocks(cfg: CoalitionConfiguration, which: Iterable[int]) -> CoalitionConfiguration:
    """Replace the selected blocks by their union, placed at the first one's position."""
    which = sorted(set(which))
    if not which:
        raise ValueError("no blocks selected for merging")
    for q in which:
        if not 0 <= q < cfg.m:
            raise IndexError(f"unknown block index {q}")
    union = 0
    for q in which:
        union |= cfg.blocks[q]
    blocks = []
    for q, b in enumerate(cfg.blocks):
        if q == which[0]:
            blocks.append(union)
        elif q not in which:
            blocks.append(b)
    return CoalitionConfiguration(tuple(blocks), cfg.n)


def _drop_player(mask: int, j: int) -> int:
    low = mask & ((1 << j) - 1)
    return low | (mask >> (j + 1)) << j


def _insert_player(mask: int, j: int) -> int:
    low = mask & ((1 << j) - 1)
    return low | (mask >> j) << (j + 1)


def shrink_index(k: int, j: int) -> int:
    """Index of player ``k`` once player ``j`` has been removed."""
    if k == j:
        raise ValueError("the removed player has no index")
    return k if k < j else k - 1


def shrink_game(game: CostGame, i: int, j: int) -> CostGame:
    """Remove ``j`` and let ``i`` carry it: ``c(S)`` or ``c(S + j)`` when ``i`` is in ``S``.

    Players above ``j`` are renumbered down by one.
    """
    if i == j:
        raise ValueError("i and j must differ")
    if not (0 <= i < game.n and 0 <= j < game.n):
        raise IndexError("player index out of range")
    i_new = shrink_index(i, j)

    def rule(S: int) -> Fraction:
        T = _insert_player(S, j)
        if S >> i_new & 1:
            T |= 1 << j
        return game(T)

    return CostGame(game.n - 1, rule, name=f"shrink({game.name})")


def shrink_configuration(cfg: CoalitionConfiguration, i: int, j: int) -> CoalitionConfiguration:
    """Blocks without ``j`` stay; blocks with ``j`` get ``i`` in its place."""
    if i == j:
        raise ValueError("i and j must differ")
    blocks = []
    for b in cfg.blocks:
        if b >> j & 1:
            b = (b & ~(1 << j)) | (1 << i)
        blocks.append(_drop_player(b, j))
    return CoalitionConfiguration(tuple(blocks), cfg.n - 1)
