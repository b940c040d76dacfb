"""Command-line interface.

Subcommands: run, compare, reproduce-paper, generate, export-figures.
Exit codes: 0 success, 1 reproduction mismatch, 2 usage or parse error.
All configuration is via flags; no environment variables.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .engine import simulate
from .fileio import CSV, JSON, ParseError, parse_workload, serialize_workload
from .gantt import render_gantt
from .metrics import (
    RunMetrics,
    compare_runs,
    compute_metrics,
    format_average,
    format_percent,
)
from .model import Workload, WorkloadError
from .policies import PolicySpecError, parse_policy_spec
from .reproduce import comparison_reports, export_figure_data, reproduce_paper
from .workloads import (
    ALL_ZERO,
    ASCENDING,
    CASE_IDS,
    DESCENDING,
    RANDOM,
    STAGGERED,
    GeneratorSpec,
    benchmark_case,
    generate_workload,
)

USAGE_ERROR = 2


class CliError(Exception):
    """Fatal usage/parse problem; message goes to stderr, exit code 2."""


def _load_workload(spec: str) -> Workload:
    if spec.startswith("case:"):
        case_id = spec.split(":", 1)[1]
        try:
            return benchmark_case(case_id)
        except KeyError as exc:
            raise CliError(str(exc)) from None
    path = Path(spec)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read workload file {spec!r}: {exc}") from None
    fmt = JSON if path.suffix.lower() == ".json" else CSV
    try:
        return parse_workload(data, fmt, label=path.stem)
    except (ParseError, WorkloadError) as exc:
        raise CliError(f"{spec}: {exc}") from None


def _policy(spec: str):
    try:
        return parse_policy_spec(spec)
    except PolicySpecError as exc:
        raise CliError(str(exc)) from None


def _percent(value) -> str:
    return format_percent(value) + "%"


def _run_text(run: RunMetrics, workload: Workload) -> str:
    lines = [
        f"algorithm: {run.descriptor.spec_string()}",
        f"workload:  {workload.label or '(unlabeled)'}",
        f"quanta:    {','.join(str(q) for q in run.quanta())}",
        "",
        f"{'pid':<8}{'arrival':>8}{'burst':>7}{'completion':>11}"
        f"{'turnaround':>11}{'waiting':>8}{'response':>9}",
    ]
    for p in run.per_process:
        lines.append(f"{p.pid:<8}{p.arrival:>8}{p.burst:>7}{p.completion:>11}"
                     f"{p.turnaround:>11}{p.waiting:>8}{p.response:>9}")
    lines += [
        "",
        f"average waiting time:    {format_average(run.avg_waiting)}",
        f"average turnaround time: {format_average(run.avg_turnaround)}",
        f"average response time:   {format_average(run.avg_response)}",
        f"context switches:        {run.context_switches}",
        f"makespan:                {run.makespan}",
        f"cpu utilization:         {_percent(run.cpu_utilization)}",
    ]
    return "\n".join(lines) + "\n"


def _run_json(run: RunMetrics, workload: Workload) -> str:
    payload = {
        "algorithm": run.descriptor.spec_string(),
        "workload": workload.label,
        "quanta": list(run.quanta()),
        "per_process": [
            {"pid": p.pid, "arrival_ms": p.arrival, "burst_ms": p.burst,
             "completion_ms": p.completion, "turnaround_ms": p.turnaround,
             "waiting_ms": p.waiting, "response_ms": p.response}
            for p in run.per_process
        ],
        "avg_waiting": float(format_average(run.avg_waiting)),
        "avg_turnaround": float(format_average(run.avg_turnaround)),
        "avg_response": float(format_average(run.avg_response)),
        "context_switches": run.context_switches,
        "makespan_ms": run.makespan,
        "cpu_utilization_pct": float(format_percent(run.cpu_utilization)),
    }
    return json.dumps(payload, indent=2) + "\n"


def _run_csv(run: RunMetrics) -> str:
    lines = ["pid,arrival_ms,burst_ms,completion_ms,turnaround_ms,waiting_ms,response_ms"]
    for p in run.per_process:
        lines.append(f"{p.pid},{p.arrival},{p.burst},{p.completion},"
                     f"{p.turnaround},{p.waiting},{p.response}")
    return "\n".join(lines) + "\n"


def _cmd_run(args) -> int:
    workload = _load_workload(args.workload)
    policy = _policy(args.algo)
    trace = simulate(workload, policy)
    run = compute_metrics(trace, workload)
    if args.format == "json":
        sys.stdout.write(_run_json(run, workload))
    elif args.format == "csv":
        sys.stdout.write(_run_csv(run))
    else:
        sys.stdout.write(_run_text(run, workload))
    if args.gantt:
        sys.stdout.write("\n" + render_gantt(trace))
    return 0


def _cmd_compare(args) -> int:
    workload = _load_workload(args.workload)
    specs = [s for s in args.algos.split(",") if s.strip()]
    if not specs:
        raise CliError("--algos must name at least one policy")
    baseline_policy = _policy(args.baseline)
    policies = [_policy(s) for s in specs]
    if all(p.descriptor != baseline_policy.descriptor for p in policies):
        policies.insert(0, baseline_policy)

    case_id = workload.label or "workload"
    runs = {}
    for policy in policies:
        if policy.descriptor in runs:
            raise CliError(f"duplicate policy {policy.descriptor.spec_string()}")
        trace = simulate(workload, policy)
        runs[policy.descriptor] = {case_id: compute_metrics(trace, workload)}
    report = compare_runs(runs, baseline_policy.descriptor, label=case_id)

    lines = [f"workload: {case_id}  (baseline {baseline_policy.descriptor.spec_string()})",
             f"{'algorithm':<14}{'waiting':>10}{'turnaround':>12}{'switches':>10}"
             f"{'wait gain':>11}{'tat gain':>10}"]
    for entry in report.entries:
        lines.append(
            f"{entry.descriptor.spec_string():<14}"
            f"{format_average(entry.waiting_total):>10}"
            f"{format_average(entry.turnaround_total):>12}"
            f"{entry.context_switch_total:>10}"
            f"{_percent(entry.waiting_gain_pct):>11}"
            f"{_percent(entry.turnaround_gain_pct):>10}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_reproduce(args) -> int:
    if args.cases.strip().lower() == "all":
        selected = CASE_IDS
    else:
        selected = tuple(dict.fromkeys(
            c.strip() for c in args.cases.split(",") if c.strip()))
        unknown = [c for c in selected if c not in CASE_IDS]
        if unknown or not selected:
            raise CliError(f"--cases must be 'all' or a comma list from "
                           f"{','.join(CASE_IDS)}; got {args.cases!r}")
    report = reproduce_paper(selected)
    if args.format == "json":
        sys.stdout.write(report.render_json())
    else:
        sys.stdout.write(report.render_text())
    return report.exit_status


def _cmd_generate(args) -> int:
    arrival, max_gap = ALL_ZERO, 0
    if args.arrival != "zero":
        head, _, gap_text = args.arrival.partition(":")
        if head != "staggered" or not gap_text:
            raise CliError(f"--arrival must be 'zero' or 'staggered:G', got {args.arrival!r}")
        try:
            max_gap = int(gap_text)
        except ValueError:
            raise CliError(f"staggered gap must be an integer, got {gap_text!r}") from None
        arrival = STAGGERED
    order = {"asc": ASCENDING, "desc": DESCENDING, "random": RANDOM}[args.order]
    try:
        spec = GeneratorSpec(n=args.n, burst_min=args.burst_min,
                             burst_max=args.burst_max, order=order,
                             arrival=arrival, max_gap=max_gap, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    workload = generate_workload(spec)
    fmt = JSON if args.output and args.output.endswith(".json") else CSV
    data = serialize_workload(workload, fmt)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _cmd_export_figures(args) -> int:
    data = export_figure_data(comparison_reports())
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrsim",
        description="Round-robin scheduling simulator with dynamic time quanta.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="simulate one workload under one policy")
    p_run.add_argument("--algo", required=True,
                       help="policy spec, e.g. rr:q=25, dabrr, mrr:floor=25")
    p_run.add_argument("--workload", required=True,
                       help="workload file (.csv/.json) or case:<I..VI|ILL>")
    p_run.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_run.add_argument("--gantt", action="store_true", help="append an ASCII gantt chart")
    p_run.set_defaults(func=_cmd_run)

    p_cmp = sub.add_parser("compare", help="compare several policies on one workload")
    p_cmp.add_argument("--workload", required=True)
    p_cmp.add_argument("--algos", required=True, help="comma-separated policy specs")
    p_cmp.add_argument("--baseline", default="rr:q=25")
    p_cmp.set_defaults(func=_cmd_compare)

    p_rep = sub.add_parser("reproduce-paper",
                           help="check every published reference cell")
    p_rep.add_argument("--cases", default="all",
                       help="'all' or a comma list such as I,IV (default: all)")
    p_rep.add_argument("--format", choices=("text", "json"), default="text")
    p_rep.set_defaults(func=_cmd_reproduce)

    p_gen = sub.add_parser("generate", help="generate a seeded random workload")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--burst-min", type=int, required=True)
    p_gen.add_argument("--burst-max", type=int, required=True)
    p_gen.add_argument("--order", choices=("asc", "desc", "random"), default="random")
    p_gen.add_argument("--arrival", default="zero", help="'zero' or 'staggered:G'")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", help="output file (.csv or .json); stdout if omitted")
    p_gen.set_defaults(func=_cmd_generate)

    p_fig = sub.add_parser("export-figures",
                           help="export comparison figure data as CSV")
    p_fig.add_argument("-o", "--output", help="output file; stdout if omitted")
    p_fig.set_defaults(func=_cmd_export_figures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"rrsim: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
