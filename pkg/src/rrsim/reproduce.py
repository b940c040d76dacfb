"""Reproduction harness: re-runs every benchmark case under all seven
policies and compares each result cell against the published reference
values.

Cells whose published value contradicts the policy's own rule (the two
registered errata and the aggregate cells they feed) are reported as
``known_erratum`` when the simulation matches the rule-derived value;
they do not fail the run.  Any other disagreement is a ``mismatch`` and
makes the exit status nonzero.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .engine import simulate
from .metrics import (
    ComparisonReport,
    RunMetrics,
    compare_runs,
    compute_metrics,
    format_average,
    format_percent,
    round_half_up,
)
from .model import PolicyDescriptor
from .policies import POLICY_NAMES, standard_policy
from .workloads import (
    CASE_IDS,
    NONZERO_ARRIVAL_CASES,
    PUBLISHED_TURNAROUND_GAINS,
    PUBLISHED_TURNAROUND_TOTALS,
    PUBLISHED_WAITING_GAINS,
    PUBLISHED_WAITING_TOTALS,
    ZERO_ARRIVAL_CASES,
    benchmark_case,
    expected_row,
)

MATCH = "match"
MISMATCH = "mismatch"
KNOWN_ERRATUM = "known_erratum"

ZERO_GROUP = "zero_arrival"
NONZERO_GROUP = "nonzero_arrival"
GRAND_GROUP = "grand"


@dataclass(frozen=True)
class CellCheck:
    """Outcome of comparing one table cell."""

    table: str        # e.g. "case III", "group totals", "grand totals"
    algorithm: str
    cell: str         # e.g. "quanta", "avg_waiting", "waiting_gain_pct"
    actual: str
    published: str
    outcome: str      # match / mismatch / known_erratum
    erratum_id: str | None = None


@dataclass(frozen=True)
class ReproductionReport:
    checks: tuple[CellCheck, ...]

    @property
    def matches(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.checks if c.outcome == MATCH)

    @property
    def mismatches(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.checks if c.outcome == MISMATCH)

    @property
    def known_errata(self) -> tuple[CellCheck, ...]:
        return tuple(c for c in self.checks if c.outcome == KNOWN_ERRATUM)

    @property
    def exit_status(self) -> int:
        return 1 if self.mismatches else 0

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            if c.outcome == MATCH:
                continue
            tag = "ERRATUM" if c.outcome == KNOWN_ERRATUM else "MISMATCH"
            suffix = f" [{c.erratum_id}]" if c.erratum_id else ""
            lines.append(f"{tag}{suffix} {c.table} / {c.algorithm} / {c.cell}: "
                         f"computed {c.actual}, published {c.published}")
        lines.append(
            f"{len(self.matches)} cells match, {len(self.known_errata)} known "
            f"errata, {len(self.mismatches)} mismatches")
        lines.append("REPRODUCTION " + ("OK" if self.exit_status == 0 else "FAILED"))
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        payload = {
            "cells": [vars(c) for c in self.checks],
            "summary": {
                "match": len(self.matches),
                "known_erratum": len(self.known_errata),
                "mismatch": len(self.mismatches),
            },
            "exit_status": self.exit_status,
        }
        return json.dumps(payload, indent=2) + "\n"


def run_case(case_id: str, algorithm: str) -> RunMetrics:
    """Simulate one benchmark case under one policy (benchmark parameters)."""
    workload = benchmark_case(case_id)
    trace = simulate(workload, standard_policy(algorithm))
    return compute_metrics(trace, workload)


def _fmt_quanta(quanta) -> str:
    return ",".join(str(q) for q in quanta)


def _check(table, algorithm, cell, actual, published, derived=None, erratum_id=None):
    """Compare one cell; erratum cells pass only when they match the rule."""
    if derived is not None and derived != published:
        outcome = KNOWN_ERRATUM if actual == derived else MISMATCH
        return CellCheck(table, algorithm, cell, str(actual), str(published),
                         outcome, erratum_id)
    outcome = MATCH if actual == published else MISMATCH
    return CellCheck(table, algorithm, cell, str(actual), str(published), outcome)


def _row_cells(case_id: str, algorithm: str, run: RunMetrics) -> list[CellCheck]:
    row = expected_row(case_id, algorithm)
    table = f"case {case_id}"
    derived = row.erratum.derived if row.erratum else None
    eid = row.erratum.id if row.erratum else None

    def cell(name, actual, published, derived_value):
        return _check(table, algorithm, name, actual, published,
                      derived_value if derived else None, eid)

    return [
        cell("quanta", _fmt_quanta(run.quanta()), _fmt_quanta(row.quanta),
             _fmt_quanta(derived.quanta) if derived else None),
        cell("context_switches", run.context_switches, row.context_switches,
             derived.context_switches if derived else None),
        cell("avg_waiting", format_average(run.avg_waiting),
             format_average(row.avg_waiting),
             format_average(derived.avg_waiting) if derived else None),
        cell("avg_turnaround", format_average(run.avg_turnaround),
             format_average(row.avg_turnaround),
             format_average(derived.avg_turnaround) if derived else None),
    ]


def _expected_sums(case_ids, algorithm):
    """Published and rule-derived (cs, waiting, turnaround) sums over cases."""
    published = [Fraction(0), Fraction(0), Fraction(0)]
    derived = [Fraction(0), Fraction(0), Fraction(0)]
    for case_id in case_ids:
        row = expected_row(case_id, algorithm)
        published[0] += row.context_switches
        published[1] += row.avg_waiting
        published[2] += row.avg_turnaround
        source = row.erratum.derived if row.erratum else row
        derived[0] += source.context_switches
        derived[1] += source.avg_waiting
        derived[2] += source.avg_turnaround
    return published, derived


def _aggregate_cells(group: str, case_ids, runs) -> list[CellCheck]:
    """Group-total cells (per-case columns are covered by the case tables)."""
    checks = []
    table = f"{group} totals"
    for algorithm in POLICY_NAMES:
        published, derived = _expected_sums(case_ids, algorithm)
        per_case = runs[algorithm]
        actual_cs = sum(per_case[c].context_switches for c in case_ids)
        actual_wait = sum((per_case[c].avg_waiting for c in case_ids), Fraction(0))
        actual_tat = sum((per_case[c].avg_turnaround for c in case_ids), Fraction(0))
        eid = _erratum_ids(case_ids, algorithm)
        checks.append(_check(table, algorithm, "context_switch_total",
                             actual_cs, int(published[0]), int(derived[0]), eid))
        checks.append(_check(table, algorithm, "waiting_total",
                             format_average(actual_wait), format_average(published[1]),
                             format_average(derived[1]), eid))
        checks.append(_check(table, algorithm, "turnaround_total",
                             format_average(actual_tat), format_average(published[2]),
                             format_average(derived[2]), eid))
    return checks


def _erratum_ids(case_ids, algorithm) -> str | None:
    ids = [expected_row(c, algorithm).erratum.id for c in case_ids
           if expected_row(c, algorithm).erratum]
    return ",".join(ids) if ids else None


def _gain_cells(runs) -> list[CellCheck]:
    """Grand totals and percentage gains versus the RR baseline."""
    checks = []
    base_wait = sum((runs["RR"][c].avg_waiting for c in CASE_IDS), Fraction(0))
    base_tat = sum((runs["RR"][c].avg_turnaround for c in CASE_IDS), Fraction(0))
    for algorithm in POLICY_NAMES:
        per_case = runs[algorithm]
        wait = sum((per_case[c].avg_waiting for c in CASE_IDS), Fraction(0))
        tat = sum((per_case[c].avg_turnaround for c in CASE_IDS), Fraction(0))
        wait_gain = round_half_up((base_wait - wait) / base_wait * 100, 2)
        tat_gain = round_half_up((base_tat - tat) / base_tat * 100, 2)

        _, derived = _expected_sums(CASE_IDS, algorithm)
        _, derived_base = _expected_sums(CASE_IDS, "RR")
        derived_wait_gain = round_half_up(
            (derived_base[1] - derived[1]) / derived_base[1] * 100, 2)
        derived_tat_gain = round_half_up(
            (derived_base[2] - derived[2]) / derived_base[2] * 100, 2)

        eid = _erratum_ids(CASE_IDS, algorithm)
        checks.append(_check("grand totals", algorithm, "waiting_total",
                             format_average(wait),
                             format_average(PUBLISHED_WAITING_TOTALS[algorithm]),
                             format_average(derived[1]), eid))
        checks.append(_check("grand totals", algorithm, "waiting_gain_pct",
                             format_percent(wait_gain),
                             format_percent(PUBLISHED_WAITING_GAINS[algorithm]),
                             format_percent(derived_wait_gain), eid))
        checks.append(_check("grand totals", algorithm, "turnaround_total",
                             format_average(tat),
                             format_average(PUBLISHED_TURNAROUND_TOTALS[algorithm]),
                             format_average(derived[2]), eid))
        checks.append(_check("grand totals", algorithm, "turnaround_gain_pct",
                             format_percent(tat_gain),
                             format_percent(PUBLISHED_TURNAROUND_GAINS[algorithm]),
                             format_percent(derived_tat_gain), eid))
    return checks


def reproduce_paper(case_ids=None) -> ReproductionReport:
    """Re-run the benchmark and compare every published cell.

    With all six cases selected the group and grand aggregates (and the
    percentage gains against RR) are compared as well.
    """
    selected = tuple(case_ids) if case_ids else CASE_IDS
    for case_id in selected:
        if case_id not in CASE_IDS:
            raise KeyError(f"unknown case {case_id!r}")

    runs: dict[str, dict[str, RunMetrics]] = {
        algorithm: {case_id: run_case(case_id, algorithm) for case_id in selected}
        for algorithm in POLICY_NAMES}

    checks: list[CellCheck] = []
    for case_id in selected:
        for algorithm in POLICY_NAMES:
            checks.extend(_row_cells(case_id, algorithm, runs[algorithm][case_id]))

    if set(selected) == set(CASE_IDS):
        checks.extend(_aggregate_cells(ZERO_GROUP, ZERO_ARRIVAL_CASES, runs))
        checks.extend(_aggregate_cells(NONZERO_GROUP, NONZERO_ARRIVAL_CASES, runs))
        checks.extend(_gain_cells(runs))

    return ReproductionReport(tuple(checks))


def comparison_reports() -> dict[str, ComparisonReport]:
    """Zero-arrival, nonzero-arrival and grand comparison reports (RR base)."""
    descriptors = {name: standard_policy(name).descriptor for name in POLICY_NAMES}
    metrics = {
        descriptors[name]: {case_id: run_case(case_id, name) for case_id in CASE_IDS}
        for name in POLICY_NAMES}

    def subset(case_ids):
        return {d: {c: per_case[c] for c in case_ids} for d, per_case in metrics.items()}

    baseline = descriptors["RR"]
    return {
        ZERO_GROUP: compare_runs(subset(ZERO_ARRIVAL_CASES), baseline, ZERO_GROUP),
        NONZERO_GROUP: compare_runs(subset(NONZERO_ARRIVAL_CASES), baseline, NONZERO_GROUP),
        GRAND_GROUP: compare_runs(subset(CASE_IDS), baseline, GRAND_GROUP),
    }


FIGURE_CSV_HEADER = "figure,algorithm,metric,case_group,value"

_FIGURES = (
    # figure id, metric attribute, source report, gain flag
    ("fig2", "avg_waiting", ZERO_GROUP, False),
    ("fig3", "avg_turnaround", ZERO_GROUP, False),
    ("fig4", "avg_waiting", NONZERO_GROUP, False),
    ("fig5", "avg_turnaround", NONZERO_GROUP, False),
    ("fig6", "waiting_gain_pct", GRAND_GROUP, True),
    ("fig7", "tat_gain_pct", GRAND_GROUP, True),
)


def export_figure_data(reports: dict[str, ComparisonReport]) -> bytes:
    """CSV rows sufficient to redraw the six comparison figures.

    ``reports`` must cover the zero-arrival, nonzero-arrival and grand
    groups, as produced by :func:`comparison_reports`.
    """
    for key in (ZERO_GROUP, NONZERO_GROUP, GRAND_GROUP):
        if key not in reports:
            raise KeyError(f"missing comparison report {key!r}")

    lines = [FIGURE_CSV_HEADER]
    for figure, metric, group, is_gain in _FIGURES:
        report = reports[group]
        for entry in report.entries:
            name = entry.descriptor.name
            if is_gain:
                value = (entry.waiting_gain_pct if metric == "waiting_gain_pct"
                         else entry.turnaround_gain_pct)
                lines.append(f"{figure},{name},{metric},{GRAND_GROUP},"
                             f"{format_percent(value)}")
            else:
                for case in entry.per_case:
                    value = (case.avg_waiting if metric == "avg_waiting"
                             else case.avg_turnaround)
                    lines.append(f"{figure},{name},{metric},{case.case_id},"
                                 f"{format_average(value)}")
                total = (entry.waiting_total if metric == "avg_waiting"
                         else entry.turnaround_total)
                lines.append(f"{figure},{name},{metric},total,{format_average(total)}")
    return ("\n".join(lines) + "\n").encode("utf-8")
