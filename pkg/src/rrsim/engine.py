"""Deterministic execution kernel for quantum-based scheduling policies.

Two queue disciplines exist:

* ``fifo_tail_rejoin`` (classic round robin): a single FIFO queue with a
  constant quantum.  Processes that arrive while a slice is running join
  the tail, in arrival order, before the preempted process rejoins.

* ``cycle_pass`` (every dynamic-quantum variant): scheduling proceeds in
  cycles.  At each cycle start the policy receives a snapshot of the ready
  queue and answers with a dispatch order and a quantum for the whole
  cycle.  Completed processes leave; survivors keep the order in which
  they were executed.  Arrival handling depends on the policy's
  ``arrival_mode``: with ``cycle_boundary`` new processes are appended
  once the cycle has finished; with ``slice_boundary_restart`` the arrival
  check runs after every slice and any new admission abandons the rest of
  the cycle so that a fresh one is planned over all unfinished processes.

The engine is a pure function of its inputs; simulating the same workload
twice yields identical traces.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .model import (
    COMPLETED,
    QUANTUM_EXPIRED,
    ExecutionTrace,
    IdleGap,
    PolicyDescriptor,
    Slice,
    Workload,
)

FIFO_TAIL_REJOIN = "fifo_tail_rejoin"
CYCLE_PASS = "cycle_pass"

CYCLE_BOUNDARY = "cycle_boundary"
SLICE_BOUNDARY_RESTART = "slice_boundary_restart"


class PolicyPlanInvalid(ValueError):
    """The policy returned a defective plan (bad order or quantum)."""


@dataclass(frozen=True)
class SnapshotEntry:
    pid: str
    remaining: int
    arrival: int
    submission_index: int
    dispatched_before: bool


@dataclass(frozen=True)
class ReadySnapshot:
    """State of the ready queue handed to a policy at cycle start.

    ``entries`` follow the current queue order (survivors of the previous
    cycle in execution order, then newly admitted processes in arrival
    order).
    """

    entries: tuple[SnapshotEntry, ...]
    now: int
    cycle_index: int

    @property
    def contains_new_arrivals(self) -> bool:
        return any(not e.dispatched_before for e in self.entries)

    def pids(self) -> tuple[str, ...]:
        return tuple(e.pid for e in self.entries)


@dataclass(frozen=True)
class CyclePlan:
    """A dispatch order (permutation of the snapshot) plus the cycle quantum."""

    order: tuple[str, ...]
    quantum: int


@dataclass(frozen=True)
class PolicyBehavior:
    """The policy contract consumed by :func:`simulate`.

    ``plan`` must be pure and deterministic: the same snapshot always
    yields the same plan.
    """

    descriptor: PolicyDescriptor
    plan: Callable[[ReadySnapshot], CyclePlan]
    arrival_mode: str = CYCLE_BOUNDARY
    queue_discipline: str = CYCLE_PASS


def _checked_plan(policy: PolicyBehavior, snapshot: ReadySnapshot) -> CyclePlan:
    plan = policy.plan(snapshot)
    if sorted(plan.order) != sorted(snapshot.pids()) or len(set(plan.order)) != len(plan.order):
        raise PolicyPlanInvalid(
            f"{policy.descriptor.name}: plan order {plan.order!r} is not a "
            f"permutation of the ready queue {snapshot.pids()!r}")
    if plan.quantum < 1:
        raise PolicyPlanInvalid(
            f"{policy.descriptor.name}: quantum {plan.quantum} < 1")
    return plan


def simulate(workload: Workload, policy: PolicyBehavior) -> ExecutionTrace:
    """Run ``policy`` over ``workload`` and return the full trace.

    The clock starts at the earliest arrival.  A process is admitted once
    the clock has reached its arrival time; whenever no admitted process
    has remaining work but some are still pending, an idle gap is emitted
    up to the next arrival.  Context-switch overhead is zero.
    """
    if policy.queue_discipline == FIFO_TAIL_REJOIN:
        return _simulate_fifo(workload, policy)
    if policy.queue_discipline == CYCLE_PASS:
        return _simulate_cycles(workload, policy)
    raise ValueError(f"unknown queue discipline {policy.queue_discipline!r}")


def _arrival_order(workload: Workload):
    """Processes sorted by (arrival, submission index)."""
    return sorted(enumerate(workload.processes), key=lambda t: (t[1].arrival, t[0]))


def _simulate_fifo(workload: Workload, policy: PolicyBehavior) -> ExecutionTrace:
    quantum = policy.descriptor.parameter("q")
    incoming = _arrival_order(workload)
    remaining = {p.pid: p.burst for p in workload.processes}

    queue: list[str] = []
    slices: list[Slice] = []
    idles: list[IdleGap] = []
    clock = workload.min_arrival()
    ptr = 0

    def admit(upto: int):
        nonlocal ptr
        while ptr < len(incoming) and incoming[ptr][1].arrival <= upto:
            queue.append(incoming[ptr][1].pid)
            ptr += 1

    admit(clock)
    cycle = 0
    pass_pending: set[str] = set()

    while queue or ptr < len(incoming):
        if not queue:
            next_arrival = incoming[ptr][1].arrival
            idles.append(IdleGap(clock, next_arrival))
            clock = next_arrival
            admit(clock)
            continue
        pid = queue.pop(0)
        if not pass_pending:
            # a new pass over the queue begins with this dispatch
            cycle += 1
            pass_pending = set(queue)
        pass_pending.discard(pid)
        run = min(quantum, remaining[pid])
        remaining[pid] -= run
        term = COMPLETED if remaining[pid] == 0 else QUANTUM_EXPIRED
        slices.append(Slice(pid, clock, clock + run, cycle, quantum, term))
        clock += run
        admit(clock)  # same-ms arrivals enqueue before the preempted process
        if remaining[pid] > 0:
            queue.append(pid)

    return ExecutionTrace(
        algorithm=policy.descriptor,
        slices=tuple(slices),
        idles=tuple(idles),
        quantum_log=((1, quantum),),
    )


def _simulate_cycles(workload: Workload, policy: PolicyBehavior) -> ExecutionTrace:
    incoming = _arrival_order(workload)
    remaining = {p.pid: p.burst for p in workload.processes}
    arrival = {p.pid: p.arrival for p in workload.processes}
    submission = {p.pid: i for i, p in enumerate(workload.processes)}

    queue: list[str] = []
    dispatched: set[str] = set()
    slices: list[Slice] = []
    idles: list[IdleGap] = []
    quantum_log: list[tuple[int, int]] = []
    clock = workload.min_arrival()
    cycle = 0
    ptr = 0

    def admit(upto: int) -> bool:
        nonlocal ptr
        grew = False
        while ptr < len(incoming) and incoming[ptr][1].arrival <= upto:
            queue.append(incoming[ptr][1].pid)
            ptr += 1
            grew = True
        return grew

    admit(clock)
    while queue or ptr < len(incoming):
        if not queue:
            next_arrival = incoming[ptr][1].arrival
            idles.append(IdleGap(clock, next_arrival))
            clock = next_arrival
            admit(clock)
            continue

        cycle += 1
        snapshot = ReadySnapshot(
            entries=tuple(
                SnapshotEntry(pid, remaining[pid], arrival[pid],
                              submission[pid], pid in dispatched)
                for pid in queue),
            now=clock,
            cycle_index=cycle,
        )
        plan = _checked_plan(policy, snapshot)
        quantum_log.append((cycle, plan.quantum))

        survivors: list[str] = []
        restarted = False
        for pos, pid in enumerate(plan.order):
            run = min(plan.quantum, remaining[pid])
            remaining[pid] -= run
            dispatched.add(pid)
            term = COMPLETED if remaining[pid] == 0 else QUANTUM_EXPIRED
            slices.append(Slice(pid, clock, clock + run, cycle, plan.quantum, term))
            clock += run
            if remaining[pid] > 0:
                survivors.append(pid)
            if policy.arrival_mode == SLICE_BOUNDARY_RESTART:
                queue = survivors + list(plan.order[pos + 1:])
                if admit(clock):
                    restarted = True  # abandon the cycle, replan over everyone
                    break
        if not restarted:
            queue = survivors
            admit(clock)

    return ExecutionTrace(
        algorithm=policy.descriptor,
        slices=tuple(slices),
        idles=tuple(idles),
        quantum_log=tuple(quantum_log),
    )


def trace_violations(trace: ExecutionTrace, workload: Workload) -> list[str]:
    """All ExecutionTrace invariants violated by ``trace``, as messages."""
    problems: list[str] = []
    specs = workload.by_pid()

    executed: dict[str, int] = {p: 0 for p in specs}
    last_slice: dict[str, Slice] = {}
    for s in trace.slices:
        if s.pid not in specs:
            problems.append(f"slice for unknown pid {s.pid!r}")
            continue
        if s.end <= s.start:
            problems.append(f"empty or reversed slice {s.pid} [{s.start},{s.end})")
        if s.duration > s.quantum_in_effect:
            problems.append(
                f"slice {s.pid} [{s.start},{s.end}) exceeds quantum {s.quantum_in_effect}")
        if s.start < specs[s.pid].arrival:
            problems.append(
                f"slice {s.pid} starts at {s.start} before arrival {specs[s.pid].arrival}")
        executed[s.pid] += s.duration
        last_slice[s.pid] = s

    for pid, spec in specs.items():
        if executed[pid] != spec.burst:
            problems.append(
                f"pid {pid}: executed {executed[pid]} ms, burst is {spec.burst} ms")

    for s in trace.slices:
        is_last = last_slice.get(s.pid) is s
        if is_last and s.termination != COMPLETED:
            problems.append(f"last slice of {s.pid} not marked completed")
        if not is_last and s.termination == COMPLETED:
            problems.append(f"non-final slice of {s.pid} marked completed")

    for gap in trace.idles:
        if gap.end <= gap.start:
            problems.append(f"empty or reversed idle gap [{gap.start},{gap.end})")

    # Timeline: slices and idles must tile [min arrival, end) without overlap.
    timeline = sorted(
        [(s.start, s.end, "slice") for s in trace.slices]
        + [(g.start, g.end, "idle") for g in trace.idles])
    cursor = workload.min_arrival()
    for start, end, kind in timeline:
        if start < cursor:
            problems.append(f"{kind} [{start},{end}) overlaps the previous interval")
        elif start > cursor:
            problems.append(f"timeline hole [{cursor},{start})")
        cursor = max(cursor, end)
    if trace.slices and trace.slices[-1].end != cursor:
        problems.append("timeline does not end at the last slice")

    # Work conservation: nobody admitted may be runnable inside an idle gap.
    completion = trace.completion_times()
    for gap in trace.idles:
        for pid, spec in specs.items():
            done_at = completion.get(pid)
            if spec.arrival < gap.end and (done_at is None or done_at > gap.start):
                problems.append(
                    f"idle gap [{gap.start},{gap.end}) while {pid} is runnable")

    if not trace.quantum_log:
        problems.append("empty quantum log")
    for cyc, q in trace.quantum_log:
        if q < 1:
            problems.append(f"cycle {cyc} logged quantum {q} < 1")

    return problems


def replay_check(trace: ExecutionTrace, workload: Workload) -> bool:
    """True iff every trace invariant holds against the workload."""
    return not trace_violations(trace, workload)
