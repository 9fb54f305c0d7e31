"""Reading and writing airport datasets.

A dataset is one UTF-8 CSV file split into sections by ``[name]`` lines.
Each section starts with a header row.  Blank lines and lines starting
with ``#`` are ignored.

``[meta]``
    ``key,value`` rows; ``total_fee`` is required when types carry weights.
``[types]``
    ``type_code,rank,takeoff_weight_tonnes`` or ``type_code,rank,explicit_cost``.
``[movements]``
    ``movement_id,type_code,airlines`` with airlines separated by ``;``.
``[alliances]`` (optional)
    ``airline,alliance``.
``[reference_fees]`` (optional)
    ``type_code,fee``: an existing per-movement fee schedule to compare with.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .airport import AirportProblem, costs_from_weights

WEIGHT_COLUMN = "takeoff_weight_tonnes"
COST_COLUMN = "explicit_cost"

_HEADERS = {
    "meta": ("key", "value"),
    "movements": ("movement_id", "type_code", "airlines"),
    "alliances": ("airline", "alliance"),
    "reference_fees": ("type_code", "fee"),
}
_ORDER = ("meta", "types", "movements", "alliances", "reference_fees")


class DatasetError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class TypeRow:
    code: str
    rank: int
    weight: Fraction | None = None
    cost: Fraction | None = None


@dataclass(frozen=True)
class MovementRow:
    movement_id: str
    type_code: str
    airlines: tuple[str, ...]


@dataclass(frozen=True)
class DatasetFile:
    types: tuple[TypeRow, ...]
    movements: tuple[MovementRow, ...]
    meta: dict[str, str] = field(default_factory=dict)
    alliances: dict[str, str] = field(default_factory=dict)
    reference_fees: dict[str, Fraction] = field(default_factory=dict)

    @property
    def weight_mode(self) -> bool:
        return self.types[0].weight is not None

    @property
    def total_fee(self) -> Fraction | None:
        raw = self.meta.get("total_fee")
        return Fraction(raw) if raw is not None else None

    @property
    def currency(self) -> str:
        return self.meta.get("currency", "")

    def type_costs(self) -> dict[str, Fraction]:
        ordered = sorted(self.types, key=lambda t: t.rank)
        if self.weight_mode:
            return costs_from_weights({t.code: t.weight for t in ordered}, self.total_fee)
        return {t.code: t.cost for t in ordered}

    def problem(self) -> AirportProblem:
        costs = self.type_costs()
        return AirportProblem.from_movements(
            list(costs.items()),
            [(m.movement_id, m.type_code, m.airlines) for m in self.movements],
        )


def _number(text: str, what: str, line: int) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DatasetError(f"{what} {text!r} is not a decimal number", line) from None


def _sections(text: str) -> dict[str, list[tuple[int, list[str]]]]:
    sections: dict[str, list[tuple[int, list[str]]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in _ORDER:
                raise DatasetError(f"unknown section [{current}]", lineno)
            if current in sections:
                raise DatasetError(f"section [{current}] appears twice", lineno)
            sections[current] = []
            continue
        if current is None:
            raise DatasetError("data before the first section header", lineno)
        row = next(csv.reader([raw]))
        sections[current].append((lineno, [cell.strip() for cell in row]))
    return sections


def _body(sections, name: str, required: bool = True):
    rows = sections.get(name)
    if rows is None:
        if required:
            raise DatasetError(f"missing section [{name}]")
        return []
    if not rows:
        raise DatasetError(f"section [{name}] has no header row")
    header_line, header = rows[0]
    expected = _HEADERS.get(name)
    if expected and tuple(header) != expected:
        raise DatasetError(f"[{name}] header must be {','.join(expected)}", header_line)
    body = []
    for lineno, row in rows[1:]:
        width = len(header)
        if len(row) != width:
            raise DatasetError(f"expected {width} fields in [{name}], got {len(row)}", lineno)
        body.append((lineno, row))
    return header, body


def loads(text: str) -> DatasetFile:
    sections = _sections(text)

    meta = {}
    if "meta" in sections:
        for lineno, (key, value) in _body(sections, "meta")[1]:
            meta[key] = value

    header, body = _body(sections, "types")
    if tuple(header[:2]) != ("type_code", "rank") or len(header) != 3 or header[2] not in (
        WEIGHT_COLUMN,
        COST_COLUMN,
    ):
        raise DatasetError(
            f"[types] header must be type_code,rank,{WEIGHT_COLUMN} or type_code,rank,{COST_COLUMN}"
        )
    weighted = header[2] == WEIGHT_COLUMN
    types, codes, ranks = [], set(), set()
    for lineno, (code, rank, amount) in body:
        if code in codes:
            raise DatasetError(f"duplicate type code {code!r}", lineno)
        try:
            rank = int(rank)
        except ValueError:
            raise DatasetError(f"rank {rank!r} is not an integer", lineno) from None
        if rank < 1 or rank in ranks:
            raise DatasetError(f"rank {rank} must be a positive, unused integer", lineno)
        value = _number(amount, header[2], lineno)
        if weighted and value <= 0:
            raise DatasetError(f"take-off weight of {code} must be positive", lineno)
        if not weighted and value < 0:
            raise DatasetError(f"cost of {code} must be nonnegative", lineno)
        codes.add(code)
        ranks.add(rank)
        types.append(TypeRow(code, rank, value if weighted else None, None if weighted else value))
    if not types:
        raise DatasetError("no aircraft types")
    if weighted:
        if "total_fee" not in meta:
            raise DatasetError("weights given but [meta] has no total_fee")
        _number(meta["total_fee"], "total_fee", None)

    movements, ids = [], set()
    for lineno, (mid, code, airlines) in _body(sections, "movements")[1]:
        if mid in ids:
            raise DatasetError(f"duplicate movement id {mid!r}", lineno)
        if code not in codes:
            raise DatasetError(f"unknown type code {code!r}", lineno)
        names = tuple(a.strip() for a in airlines.split(";") if a.strip())
        if not names:
            raise DatasetError(f"movement {mid!r} has no airline", lineno)
        if len(set(names)) != len(names):
            raise DatasetError(f"movement {mid!r} lists an airline twice", lineno)
        ids.add(mid)
        movements.append(MovementRow(mid, code, names))
    if not movements:
        raise DatasetError("no movements")
    known = {a for m in movements for a in m.airlines}

    alliances = {}
    if "alliances" in sections:
        for lineno, (airline, alliance) in _body(sections, "alliances")[1]:
            if airline not in known:
                raise DatasetError(f"alliance member {airline!r} operates no movement", lineno)
            if airline in alliances:
                raise DatasetError(f"airline {airline!r} listed in two alliances", lineno)
            alliances[airline] = alliance

    reference = {}
    if "reference_fees" in sections:
        for lineno, (code, fee) in _body(sections, "reference_fees")[1]:
            if code not in codes:
                raise DatasetError(f"unknown type code {code!r}", lineno)
            reference[code] = _number(fee, "fee", lineno)

    ds = DatasetFile(tuple(types), tuple(movements), meta, alliances, reference)
    try:
        ds.problem()
    except ValueError as exc:
        raise DatasetError(str(exc)) from None
    return ds


def read_dataset(path) -> DatasetFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def parse_dataset(path) -> AirportProblem:
    return read_dataset(path).problem()


def decimal_string(x: Fraction) -> str:
    """Exact decimal rendering; fails for non-terminating fractions."""
    x = Fraction(x)
    d, places = x.denominator, 0
    while d % 10 == 0:
        d //= 10
        places += 1
    for factor in (2, 5):
        while d % factor == 0:
            d //= factor
            places += 1
    if d != 1:
        raise ValueError(f"{x} has no finite decimal expansion")
    scaled = x * 10**places
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    if not places:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def dumps(ds: DatasetFile) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")

    def section(name, header, rows):
        out.write(f"[{name}]\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write("\n")

    if ds.meta:
        section("meta", _HEADERS["meta"], ds.meta.items())
    column = WEIGHT_COLUMN if ds.weight_mode else COST_COLUMN
    section(
        "types",
        ("type_code", "rank", column),
        [
            (t.code, t.rank, decimal_string(t.weight if ds.weight_mode else t.cost))
            for t in ds.types
        ],
    )
    section(
        "movements",
        _HEADERS["movements"],
        [(m.movement_id, m.type_code, ";".join(m.airlines)) for m in ds.movements],
    )
    if ds.alliances:
        section("alliances", _HEADERS["alliances"], ds.alliances.items())
    if ds.reference_fees:
        section(
            "reference_fees",
            _HEADERS["reference_fees"],
            [(code, decimal_string(fee)) for code, fee in ds.reference_fees.items()],
        )
    return out.getvalue()


def write_dataset(ds: DatasetFile, path) -> None:
    Path(path).write_text(dumps(ds), encoding="utf-8")


def bundled_path(name: str = "santiago") -> Path:
    """Path of a dataset shipped with the package."""
    return Path(__file__).with_name("data") / f"{name}.csv"
