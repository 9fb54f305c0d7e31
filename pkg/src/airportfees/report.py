"""Fee reports: grouping, totals and rendering as text, CSV or JSON.

Movements with the same airline set and type always pay the same fee, so
reports show one row per such group with a movement count.

Two kinds of totals are kept for every payer (an airline, or an alliance
when airlines are grouped).  The exact total is the sum of the payer's
shares.  The billed total is what the payer is charged when each
per-movement share is rounded to the cent-and-a-tenth (3 decimals) first,
so the printed rows always add up to the printed totals.  Decimal output
shows billed totals; ``exact`` output shows exact ones.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .airport import (
    AirportProblem,
    ConfigurationError,
    FeeReport,
    coarsen,
    configuration_closed,
    owen_closed,
    shapley_closed,
)
from .dataset import DatasetFile

PLACES = 3
METHODS = ("configuration", "owen", "shapley")


def round_money(x, places: int = PLACES) -> Fraction:
    """Round half to even at ``places`` decimals, exactly."""
    scale = 10**places
    return Fraction(round(Fraction(x) * scale), scale)


def fmt(x, exact: bool = False, places: int = PLACES) -> str:
    x = Fraction(x)
    if exact:
        return str(x)
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}" if places else sign + digits


@dataclass(frozen=True)
class FeeGroup:
    airlines: tuple[str, ...]
    type_code: str
    type_rank: int
    count: int
    fee: Fraction
    shares: tuple[Fraction, ...]


@dataclass(frozen=True)
class PayerTotal:
    payer: str
    exact: Fraction
    billed: Fraction


@dataclass(frozen=True)
class ReportFile:
    method: str
    currency: str
    groups: tuple[FeeGroup, ...]
    totals: tuple[PayerTotal, ...]
    checksum: Fraction

    def total_of(self, payer: str) -> PayerTotal:
        for t in self.totals:
            if t.payer == payer:
                return t
        raise KeyError(payer)


def group_report(report: FeeReport) -> tuple[FeeGroup, ...]:
    p = report.problem
    groups: dict[tuple, list] = {}
    for i, parts in enumerate(report.shares):
        t = p.movement_types[i]
        key = (tuple(a for a, _ in parts), t, tuple(x for _, x in parts))
        if key in groups:
            groups[key][0] += 1
        else:
            groups[key] = [1, report.fees[i]]
    return tuple(
        FeeGroup(
            airlines=tuple(p.airline_names[a] for a in airlines),
            type_code=p.types[t].code,
            type_rank=t + 1,
            count=count,
            fee=fee,
            shares=shares,
        )
        for (airlines, t, shares), (count, fee) in groups.items()
    )


def payer_totals(groups, payer_of: Mapping[str, str] | None = None) -> tuple[PayerTotal, ...]:
    """Exact and billed totals; ``payer_of`` maps airlines to the entity billed."""
    payer_of = payer_of or {}
    exact: dict[str, Fraction] = {}
    billed: dict[str, Fraction] = {}
    for g in groups:
        share_of: dict[str, Fraction] = {}
        for a, x in zip(g.airlines, g.shares):
            payer = payer_of.get(a, a)
            share_of[payer] = share_of.get(payer, Fraction(0)) + x
        for payer, x in share_of.items():
            exact[payer] = exact.get(payer, Fraction(0)) + g.count * x
            billed[payer] = billed.get(payer, Fraction(0)) + g.count * round_money(x)
    return tuple(PayerTotal(k, exact[k], billed[k]) for k in exact)


def compute(method: str, ds: DatasetFile, use_alliances: bool = False) -> FeeReport:
    """Run one fee method on a dataset.

    The Owen method needs each movement in a single block; with
    ``use_alliances`` airlines are first grouped by the dataset's alliances.
    """
    p = ds.problem()
    if method == "configuration":
        return configuration_closed(p)
    if method == "shapley":
        return shapley_closed(p)
    if method == "owen":
        if use_alliances:
            p = coarsen(p, ds.alliances)
        return owen_closed(p)
    raise ValueError(f"unknown method {method!r}")


def run(method: str, ds: DatasetFile, use_alliances: bool = False) -> ReportFile:
    report = compute(method, ds, use_alliances)
    groups = group_report(report)
    payer_of = ds.alliances if use_alliances and method != "owen" else None
    return ReportFile(
        method=method,
        currency=ds.currency,
        groups=groups,
        totals=payer_totals(groups, payer_of),
        checksum=report.checksum,
    )


def _table(rows: list[list[str]], right: set[int]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    lines = []
    for n, r in enumerate(rows):
        cells = [c.rjust(w) if k in right else c.ljust(w) for k, (c, w) in enumerate(zip(r, widths))]
        lines.append("  ".join(cells).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render(
    rf: ReportFile,
    format: str = "table",
    exact: bool = False,
    per_airline: bool = False,
    split_by_airline: bool = False,
) -> str:
    money = lambda x: fmt(x, exact)  # noqa: E731
    checksum = fmt(rf.checksum, exact, 2)
    totals = [(t.payer, t.exact if exact else t.billed) for t in rf.totals]

    if format == "json":
        doc = {
            "method": rf.method,
            "currency": rf.currency,
            "exact": exact,
            "rows": [
                {
                    "airlines": list(g.airlines),
                    "type": g.type_code,
                    "rank": g.type_rank,
                    "count": g.count,
                    "fee_per_movement": money(g.fee),
                    **(
                        {"split": {a: money(x) for a, x in zip(g.airlines, g.shares)}}
                        if split_by_airline
                        else {}
                    ),
                }
                for g in rf.groups
            ],
            "checksum": checksum,
        }
        if per_airline:
            doc["totals"] = {payer: money(x) for payer, x in totals}
        return json.dumps(doc, indent=2) + "\n"

    if format == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        header = ["record", "airlines", "type", "rank", "count", "fee_per_movement"]
        if split_by_airline:
            header.append("split")
        w.writerow(header)
        for g in rf.groups:
            row = ["movement", ";".join(g.airlines), g.type_code, g.type_rank, g.count, money(g.fee)]
            if split_by_airline:
                row.append(";".join(f"{a}={money(x)}" for a, x in zip(g.airlines, g.shares)))
            w.writerow(row)
        if per_airline:
            for payer, x in totals:
                w.writerow(["total", payer, "", "", "", money(x)])
        w.writerow(["checksum", "", "", "", "", checksum])
        return out.getvalue()

    if format != "table":
        raise ValueError(f"unknown format {format!r}")
    head = ["Airlines", "Type", "Count", "Fee p.m."]
    if split_by_airline:
        head.append("Split by airline")
    rows = [head]
    for g in rf.groups:
        row = [", ".join(g.airlines), f"{g.type_code} ({g.type_rank})", str(g.count), money(g.fee)]
        if split_by_airline:
            row.append("; ".join(f"{a} {money(x)}" for a, x in zip(g.airlines, g.shares)))
        rows.append(row)
    parts = [f"{rf.method} value per movement ({rf.currency or 'currency units'})", _table(rows, {2, 3})]
    if per_airline:
        parts.append(_table([["Payer", "Total fee"]] + [[k, money(x)] for k, x in totals], {1}))
    parts.append(f"Checksum: {checksum}")
    return "\n\n".join(parts) + "\n"


@dataclass(frozen=True)
class TypeAverages:
    type_code: str
    type_rank: int
    count: int
    averages: dict[str, Fraction]


@dataclass(frozen=True)
class Comparison:
    columns: tuple[str, ...]
    types: tuple[TypeAverages, ...]
    totals: dict[str, dict[str, PayerTotal]]
    checksums: dict[str, Fraction]


def compare(ds: DatasetFile) -> Comparison:
    """Average fee per type and total per alliance under every method.

    Airlines are grouped by the dataset's alliances (ungrouped airlines
    stand alone); the Owen method runs on that grouping.  A reference fee
    schedule, when present, is added as a last column.
    """
    p = ds.problem()
    reports = {
        "configuration": configuration_closed(p),
        "owen": owen_closed(coarsen(p, ds.alliances)),
        "shapley": shapley_closed(p),
    }
    columns = list(METHODS)
    if ds.reference_fees:
        columns.append("reference")
    rows = []
    for t, kind in enumerate(p.types):
        members_of_type = [i for i, ty in enumerate(p.movement_types) if ty == t]
        avg = {
            m: sum((reports[m].fees[i] for i in members_of_type), Fraction(0)) / len(members_of_type)
            for m in METHODS
        }
        if ds.reference_fees:
            avg["reference"] = ds.reference_fees[kind.code]
        rows.append(TypeAverages(kind.code, t + 1, len(members_of_type), avg))

    totals: dict[str, dict[str, PayerTotal]] = {}
    for m in METHODS:
        payer_of = None if m == "owen" else ds.alliances
        for t in payer_totals(group_report(reports[m]), payer_of):
            totals.setdefault(t.payer, {})[m] = t
    if ds.reference_fees:
        fee_of = {code: round_money(fee) for code, fee in ds.reference_fees.items()}
        exact_fee = dict(ds.reference_fees)
        for g in group_report(reports["shapley"]):
            payers = {ds.alliances.get(a, a) for a in g.airlines}
            for payer in payers:
                share = Fraction(1, len(payers))
                prev = totals[payer].get("reference", PayerTotal(payer, Fraction(0), Fraction(0)))
                totals[payer]["reference"] = PayerTotal(
                    payer,
                    prev.exact + g.count * share * exact_fee[g.type_code],
                    prev.billed + g.count * round_money(share * fee_of[g.type_code]),
                )
    return Comparison(
        tuple(columns),
        tuple(rows),
        totals,
        {m: r.checksum for m, r in reports.items()},
    )


def render_comparison(cmp: Comparison, format: str = "table", exact: bool = False) -> str:
    money = lambda x: fmt(x, exact)  # noqa: E731
    pick = lambda t: t.exact if exact else t.billed  # noqa: E731
    if format == "json":
        doc = {
            "columns": list(cmp.columns),
            "averages": [
                {"type": r.type_code, "rank": r.type_rank, "count": r.count,
                 **{c: money(r.averages[c]) for c in cmp.columns}}
                for r in cmp.types
            ],
            "totals": {
                payer: {c: money(pick(v)) for c, v in by.items()} for payer, by in cmp.totals.items()
            },
            "checksums": {m: fmt(x, exact, 2) for m, x in cmp.checksums.items()},
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "csv":
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["record", "key", "count", *cmp.columns])
        for r in cmp.types:
            w.writerow(["average", r.type_code, r.count, *(money(r.averages[c]) for c in cmp.columns)])
        for payer, by in cmp.totals.items():
            w.writerow(["total", payer, "", *(money(pick(by[c])) if c in by else "" for c in cmp.columns)])
        w.writerow(["checksum", "", "", *(fmt(cmp.checksums[c], exact, 2) if c in cmp.checksums else "" for c in cmp.columns)])
        return out.getvalue()
    if format != "table":
        raise ValueError(f"unknown format {format!r}")
    head = ["Type", "Count", *cmp.columns]
    rows = [head] + [
        [f"{r.type_code} ({r.type_rank})", str(r.count), *(money(r.averages[c]) for c in cmp.columns)]
        for r in cmp.types
    ]
    right = set(range(1, len(head)))
    tot = [["Payer", *cmp.columns]] + [
        [payer, *(money(pick(by[c])) if c in by else "-" for c in cmp.columns)]
        for payer, by in cmp.totals.items()
    ]
    return "\n\n".join([
        "Average fee per movement",
        _table(rows, right),
        "Total fee per payer",
        _table(tot, set(range(1, len(cmp.columns) + 1))),
    ]) + "\n"


__all__ = [
    "AirportProblem",
    "Comparison",
    "ConfigurationError",
    "FeeGroup",
    "PayerTotal",
    "ReportFile",
    "compare",
    "compute",
    "fmt",
    "group_report",
    "payer_totals",
    "render",
    "render_comparison",
    "round_money",
    "run",
]
