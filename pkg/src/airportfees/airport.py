"""Airport games and their closed-form fee rules.

An airport problem ranks aircraft types by runway cost.  Each movement
(a take-off or landing) has one type and is operated by one or more
airlines; the airline blocks form a coalition configuration over the
movements, overlapping wherever a flight is code-shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .game import CoalitionConfiguration, CostGame, members, merge_blocks


class ConfigurationError(ValueError):
    """The fee method does not apply to the problem's airline structure."""


@dataclass(frozen=True)
class AircraftType:
    code: str
    cost: Fraction


@dataclass(frozen=True)
class AirportProblem:
    """Aircraft types, movements and the airline configuration over movements.

    ``movement_types[i]`` is the 0-based index into ``types`` of movement
    ``i``; block ``a`` of ``configuration`` is the set of movements operated
    by ``airline_names[a]``.  Every type must be used by some movement
    (:meth:`from_movements` drops unused ones).
    """

    types: tuple[AircraftType, ...]
    movement_ids: tuple[str, ...]
    movement_types: tuple[int, ...]
    configuration: CoalitionConfiguration
    airline_names: tuple[str, ...]

    def __post_init__(self):
        previous = Fraction(0)
        for t in self.types:
            if t.cost < previous:
                raise ValueError(f"type {t.code}: costs must be nonnegative and nondecreasing")
            previous = t.cost
        if len(self.movement_types) != len(self.movement_ids):
            raise ValueError("one type per movement required")
        if len(set(self.movement_ids)) != len(self.movement_ids):
            raise ValueError("movement ids must be unique")
        if self.configuration.n != len(self.movement_ids):
            raise ValueError("configuration must range over the movements")
        if len(self.airline_names) != self.configuration.m:
            raise ValueError("one airline name per configuration block required")
        if len(set(self.airline_names)) != len(self.airline_names):
            raise ValueError("airline names must be unique")
        used = set(self.movement_types)
        for t in self.movement_types:
            if not 0 <= t < len(self.types):
                raise ValueError(f"movement type index {t} out of range")
        if used != set(range(len(self.types))):
            raise ValueError("every aircraft type must have a movement")

    @classmethod
    def from_movements(
        cls,
        types: Sequence[tuple[str, object]],
        movements: Sequence[tuple[str, str, Sequence[str]]],
        airline_order: Sequence[str] | None = None,
    ) -> "AirportProblem":
        """Build a problem from ``(code, cost)`` and ``(id, type_code, airlines)`` rows.

        Types are taken in the given order and unused ones are dropped.
        Airlines are ordered by ``airline_order`` if given, else by first
        appearance among the movements.
        """
        index = {}
        for t, (code, _) in enumerate(types):
            if code in index:
                raise ValueError(f"duplicate type code {code!r}")
            index[code] = t
        order = list(airline_order or [])
        for _, code, airlines in movements:
            if code not in index:
                raise ValueError(f"unknown type code {code!r}")
            if not airlines:
                raise ValueError("movement without an airline")
            for a in airlines:
                if a not in order:
                    order.append(a)
        used = sorted({index[code] for _, code, _ in movements})
        kept = {old: new for new, old in enumerate(used)}
        blocks = [0] * len(order)
        position = {a: k for k, a in enumerate(order)}
        for i, (_, _, airlines) in enumerate(movements):
            for a in airlines:
                blocks[position[a]] |= 1 << i
        names, kept_blocks = [], []
        for a, b in zip(order, blocks):
            if b:
                names.append(a)
                kept_blocks.append(b)
        return cls(
            types=tuple(AircraftType(types[t][0], Fraction(types[t][1])) for t in used),
            movement_ids=tuple(str(mid) for mid, _, _ in movements),
            movement_types=tuple(kept[index[code]] for _, code, _ in movements),
            configuration=CoalitionConfiguration(tuple(kept_blocks), len(movements)),
            airline_names=tuple(names),
        )

    @property
    def n(self) -> int:
        return len(self.movement_ids)

    @property
    def ladder(self) -> tuple[Fraction, ...]:
        """``(c_0, c_1, ..., c_T)`` with ``c_0 = 0``."""
        return (Fraction(0),) + tuple(t.cost for t in self.types)

    @property
    def top_cost(self) -> Fraction:
        return self.types[-1].cost if self.types else Fraction(0)

    def airlines_of(self, i: int) -> list[int]:
        return self.configuration.blocks_containing(i)

    def airline_index(self, name: str) -> int:
        try:
            return self.airline_names.index(name)
        except ValueError:
            raise KeyError(f"unknown airline {name!r}") from None


@dataclass(frozen=True)
class FeeReport:
    """Per-movement fees with their per-airline decomposition.

    ``shares[i]`` lists ``(block index, amount)`` pairs summing to
    ``fees[i]``.
    """

    method: str
    problem: AirportProblem
    fees: tuple[Fraction, ...]
    shares: tuple[tuple[tuple[int, Fraction], ...], ...]

    @property
    def per_movement(self) -> dict[str, Fraction]:
        return dict(zip(self.problem.movement_ids, self.fees))

    @property
    def per_airline(self) -> dict[str, Fraction]:
        return airline_totals(self.problem, self)

    @property
    def checksum(self) -> Fraction:
        return sum(self.fees, Fraction(0))


def airport_game(p: AirportProblem) -> CostGame:
    costs = [p.types[t].cost for t in p.movement_types]

    def rule(S: int) -> Fraction:
        best = Fraction(0)
        for i in members(S):
            if costs[i] > best:
                best = costs[i]
        return best

    def tabulate() -> list[Fraction]:
        # costs rise with the type index, so track the largest index in S
        rank = [t + 1 for t in p.movement_types]
        top = [0] * (1 << p.n)
        for S in range(1, len(top)):
            low = S & -S
            r = rank[low.bit_length() - 1]
            rest = top[S ^ low]
            top[S] = r if r > rest else rest
        ladder = p.ladder
        return [ladder[r] for r in top]

    return CostGame(p.n, rule, name="airport", tabulate=tabulate)


def _layer_counts(p: AirportProblem) -> list[list[int]]:
    """``counts[a][t]``: movements of block ``a`` with type index ``>= t`` (0-based)."""
    T = len(p.types)
    counts = []
    for block in p.configuration.blocks:
        per_type = [0] * (T + 1)
        for i in members(block):
            per_type[p.movement_types[i]] += 1
        for t in range(T - 1, -1, -1):
            per_type[t] += per_type[t + 1]
        counts.append(per_type[:T])
    return counts


def incidence_fees(p: AirportProblem) -> list[list[Fraction]]:
    """``fees[a][t]``: one movement's share for airline ``a`` when of type ``t``.

    Each runway segment cost is split equally among the airlines needing
    it, then equally among that airline's movements needing it.  Entries
    for types an airline does not fly above are left as computed but never
    charged.
    """
    c = p.ladder
    counts = _layer_counts(p)
    T = len(p.types)
    active = [sum(1 for row in counts if row[t]) for t in range(T)]
    fees = []
    for row in counts:
        running = Fraction(0)
        out = []
        for t in range(T):
            if row[t]:
                running += (c[t + 1] - c[t]) / (active[t] * row[t])
            out.append(running)
        fees.append(out)
    return fees


def configuration_closed(p: AirportProblem) -> FeeReport:
    """Configuration value fees: a movement pays its share in every airline operating it."""
    per_type = incidence_fees(p)
    fees, shares = [], []
    for i, t in enumerate(p.movement_types):
        parts = tuple((a, per_type[a][t]) for a in p.airlines_of(i))
        shares.append(parts)
        fees.append(sum((x for _, x in parts), Fraction(0)))
    return FeeReport("configuration", p, tuple(fees), tuple(shares))


def owen_closed(p: AirportProblem) -> FeeReport:
    """Owen value fees; each movement must belong to exactly one airline block.

    Raises:
        ConfigurationError: a movement is code-shared between blocks.
    """
    if not p.configuration.is_partition:
        shared = [p.movement_ids[i] for i in range(p.n) if len(p.airlines_of(i)) > 1]
        raise ConfigurationError(
            f"Owen fees need each movement in one block, but {len(shared)} movements "
            f"are code-shared (first: {shared[0]}); use the configuration method "
            "or coarsen airlines into alliances"
        )
    report = configuration_closed(p)
    return FeeReport("owen", p, report.fees, report.shares)


def shapley_closed(p: AirportProblem) -> FeeReport:
    """Shapley fees; airlines are ignored for the fee itself.

    Each segment's cost is split equally over all movements needing it.  A
    code-shared movement's fee is attributed to its airlines in equal parts.
    """
    c = p.ladder
    T = len(p.types)
    above = [0] * (T + 1)
    for t in p.movement_types:
        above[t] += 1
    for t in range(T - 1, -1, -1):
        above[t] += above[t + 1]
    per_type, running = [], Fraction(0)
    for t in range(T):
        running += (c[t + 1] - c[t]) / above[t]
        per_type.append(running)
    fees, shares = [], []
    for i, t in enumerate(p.movement_types):
        airlines = p.airlines_of(i)
        part = per_type[t] / len(airlines)
        shares.append(tuple((a, part) for a in airlines))
        fees.append(per_type[t])
    return FeeReport("shapley", p, tuple(fees), tuple(shares))


def airline_totals(p: AirportProblem, report: FeeReport) -> dict[str, Fraction]:
    """Total fee per airline.

    For configuration reports the total is rebuilt from the per-type
    incidence fees times the airline's movement count of each type rather
    than from the report's rows.
    """
    if report.problem != p:
        raise ValueError("report was computed for a different problem")
    totals = {name: Fraction(0) for name in p.airline_names}
    if report.method == "configuration":
        per_type = incidence_fees(p)
        for a, block in enumerate(p.configuration.blocks):
            counts = [0] * len(p.types)
            for i in members(block):
                counts[p.movement_types[i]] += 1
            totals[p.airline_names[a]] = sum(
                (k * per_type[a][t] for t, k in enumerate(counts) if k), Fraction(0)
            )
        return totals
    for parts in report.shares:
        for a, x in parts:
            totals[p.airline_names[a]] += x
    return totals


def merge_airlines(
    p: AirportProblem, which: Iterable[str], name: str | None = None
) -> AirportProblem:
    """Merge the named airlines into one, placed at the first one's position."""
    which = list(dict.fromkeys(which))
    if not which:
        raise ValueError("no airlines selected for merging")
    indices = sorted(p.airline_index(a) for a in which)
    merged_name = name or "+".join(p.airline_names[q] for q in indices)
    names = []
    for q, a in enumerate(p.airline_names):
        if q == indices[0]:
            names.append(merged_name)
        elif q not in indices:
            names.append(a)
    return AirportProblem(
        p.types,
        p.movement_ids,
        p.movement_types,
        merge_blocks(p.configuration, indices),
        tuple(names),
    )


def coarsen(p: AirportProblem, groups: Mapping[str, str]) -> AirportProblem:
    """Replace airlines by their groups (alliances); ungrouped airlines stay alone.

    Groups are ordered by the first airline that belongs to them.
    """
    for a in groups:
        p.airline_index(a)
    labels, blocks = [], []
    for a, block in zip(p.airline_names, p.configuration.blocks):
        label = groups.get(a, a)
        if label in labels:
            blocks[labels.index(label)] |= block
        else:
            labels.append(label)
            blocks.append(block)
    return AirportProblem(
        p.types,
        p.movement_ids,
        p.movement_types,
        CoalitionConfiguration(tuple(blocks), p.n),
        tuple(labels),
    )


def costs_from_weights(weights: Mapping[str, object], total) -> dict[str, Fraction]:
    """Type costs proportional to take-off weight, the heaviest type costing ``total``.

    ``weights`` must list types in nondecreasing weight order.
    """
    if not weights:
        raise ValueError("no aircraft types given")
    ws = {code: Fraction(w) for code, w in weights.items()}
    previous = Fraction(0)
    for code, w in ws.items():
        if w <= 0:
            raise ValueError(f"type {code}: take-off weight must be positive")
        if w < previous:
            raise ValueError(f"type {code}: weights must be nondecreasing in type order")
        previous = w
    heaviest = max(ws.values())
    total = Fraction(total)
    return {code: total * w / heaviest for code, w in ws.items()}


def example_problem() -> AirportProblem:
    """Four movements, three airlines; movement 2 is code-shared by the last two."""
    return AirportProblem.from_movements(
        [("t1", 10), ("t2", 20), ("t3", 22)],
        [
            ("1", "t1", ["a1"]),
            ("2", "t2", ["a2", "a3"]),
            ("3", "t3", ["a2"]),
            ("4", "t2", ["a3"]),
        ],
    )


__all__ = [
    "AircraftType",
    "AirportProblem",
    "ConfigurationError",
    "FeeReport",
    "airline_totals",
    "airport_game",
    "coarsen",
    "configuration_closed",
    "costs_from_weights",
    "example_problem",
    "incidence_fees",
    "merge_airlines",
    "owen_closed",
    "shapley_closed",
]
