"""Deterministic CPU-scheduling simulator for round-robin variants with
dynamic time quanta (RR, DQRRR, IRRVQ, SARR, RP-5, MRR, DABRR)."""

from .engine import (
    CyclePlan,
    PolicyBehavior,
    PolicyPlanInvalid,
    ReadySnapshot,
    SnapshotEntry,
    replay_check,
    simulate,
    trace_violations,
)
from .metrics import (
    ComparisonReport,
    InconsistentTrace,
    MismatchedCaseSets,
    ProcessMetrics,
    RunMetrics,
    compare_runs,
    compute_metrics,
    context_switches,
)
from .model import (
    DuplicatePid,
    EmptyWorkload,
    ExecutionTrace,
    IdleGap,
    NegativeArrival,
    NonPositiveBurst,
    PolicyDescriptor,
    ProcessSpec,
    Slice,
    Workload,
    WorkloadError,
    validate_workload,
)
from .policies import (
    PolicySpecError,
    alternating_min_max_order,
    make_dabrr,
    make_dqrrr,
    make_irrvq,
    make_mrr,
    make_round_robin,
    make_rp5,
    make_sarr,
    mean_quantum,
    median_quantum,
    parse_policy_spec,
    range_quantum,
)
from .workloads import GeneratorSpec, benchmark_case, expected_row, generate_workload

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
