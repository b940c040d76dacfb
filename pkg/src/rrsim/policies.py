"""The seven scheduling policies and their quantum/ordering rules.

Quantum helpers work on the multiset of remaining bursts and always
return at least 1.  Every dynamic quantum uses floor division.  Sorting
ties are broken by (remaining burst, arrival, submission index), which is
a total order, so planning is deterministic.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .engine import (
    CYCLE_BOUNDARY,
    CYCLE_PASS,
    FIFO_TAIL_REJOIN,
    SLICE_BOUNDARY_RESTART,
    CyclePlan,
    PolicyBehavior,
    ReadySnapshot,
    SnapshotEntry,
)
from .model import PolicyDescriptor

POLICY_NAMES = ("RR", "DQRRR", "IRRVQ", "SARR", "RP5", "MRR", "DABRR")


class PolicySpecError(ValueError):
    """A policy spec string could not be parsed."""


def mean_quantum(remaining: Iterable[int]) -> int:
    """Floor of the mean remaining burst, at least 1."""
    values = list(remaining)
    return max(1, sum(values) // len(values))


def median_quantum(remaining: Iterable[int]) -> int:
    """Floor of the median remaining burst, at least 1.

    Even counts take the floored mean of the two middle elements.
    """
    values = sorted(remaining)
    mid = len(values) // 2
    if len(values) % 2:
        result = values[mid]
    else:
        result = (values[mid - 1] + values[mid]) // 2
    return max(1, result)


def range_quantum(remaining: Iterable[int], floor: int) -> int:
    """Max minus min remaining burst, never below ``floor``.

    A single survivor gets the larger of its remaining burst and the
    floor, so it finishes in one slice whenever it can.
    """
    values = list(remaining)
    if len(values) == 1:
        return max(values[0], floor)
    return max(max(values) - min(values), floor)


def alternating_min_max_order(entries: Sequence[tuple[str, int]]) -> tuple[str, ...]:
    """Order pids as lowest, highest, 2nd lowest, 2nd highest, ...

    ``entries`` are (pid, remaining) pairs; equal remainings keep their
    input order.  Reading the result at even positions and then at odd
    positions reversed gives back the ascending sort.
    """
    ranked = sorted(range(len(entries)), key=lambda i: (entries[i][1], i))
    order: list[str] = []
    lo, hi = 0, len(ranked) - 1
    while lo <= hi:
        order.append(entries[ranked[lo]][0])
        lo += 1
        if lo <= hi:
            order.append(entries[ranked[hi]][0])
            hi -= 1
    return tuple(order)


def _ascending(entries: Iterable[SnapshotEntry]) -> list[SnapshotEntry]:
    return sorted(entries, key=lambda e: (e.remaining, e.arrival, e.submission_index))


def make_round_robin(q: int) -> PolicyBehavior:
    """Classic round robin with a constant quantum ``q``."""
    if q < 1:
        raise PolicySpecError(f"rr quantum must be >= 1, got {q}")
    descriptor = PolicyDescriptor.of("RR", q=q)

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        return CyclePlan(snapshot.pids(), q)

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, FIFO_TAIL_REJOIN)


def make_dabrr() -> PolicyBehavior:
    """Mean-of-remaining quantum over the ascending queue.

    Replans immediately (at the next slice boundary) whenever a new
    process arrives, instead of waiting for the cycle to finish.
    """
    descriptor = PolicyDescriptor.of("DABRR")

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        ordered = _ascending(snapshot.entries)
        return CyclePlan(tuple(e.pid for e in ordered),
                         mean_quantum(e.remaining for e in ordered))

    return PolicyBehavior(descriptor, plan, SLICE_BOUNDARY_RESTART, CYCLE_PASS)


def make_sarr() -> PolicyBehavior:
    """Median-of-remaining quantum over the FIFO queue order."""
    descriptor = PolicyDescriptor.of("SARR")

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        return CyclePlan(snapshot.pids(),
                         median_quantum(e.remaining for e in snapshot.entries))

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, CYCLE_PASS)


def make_dqrrr() -> PolicyBehavior:
    """Median quantum with min/max alternation on arrival cycles.

    Cycles that contain newly arrived processes are rearranged as
    lowest, highest, 2nd lowest, ...; cycles without new arrivals keep
    the requeue order.
    """
    descriptor = PolicyDescriptor.of("DQRRR")

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        quantum = median_quantum(e.remaining for e in snapshot.entries)
        if snapshot.contains_new_arrivals:
            ordered = _ascending(snapshot.entries)
            order = alternating_min_max_order([(e.pid, e.remaining) for e in ordered])
        else:
            order = snapshot.pids()
        return CyclePlan(order, quantum)

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, CYCLE_PASS)


def make_irrvq() -> PolicyBehavior:
    """Shortest remaining burst as quantum, ascending order.

    The shortest process always finishes, so there are at most as many
    cycles as processes.
    """
    descriptor = PolicyDescriptor.of("IRRVQ")

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        ordered = _ascending(snapshot.entries)
        return CyclePlan(tuple(e.pid for e in ordered), ordered[0].remaining)

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, CYCLE_PASS)


def make_rp5(base: int) -> PolicyBehavior:
    """Quantum doubling each cycle from ``base``, FIFO queue order."""
    if base < 1:
        raise PolicySpecError(f"rp5 base must be >= 1, got {base}")
    descriptor = PolicyDescriptor.of("RP5", base=base)

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        return CyclePlan(snapshot.pids(), base << (snapshot.cycle_index - 1))

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, CYCLE_PASS)


def make_mrr(floor: int) -> PolicyBehavior:
    """Max-minus-min quantum with a lower bound, ascending order."""
    if floor < 1:
        raise PolicySpecError(f"mrr floor must be >= 1, got {floor}")
    descriptor = PolicyDescriptor.of("MRR", floor=floor)

    def plan(snapshot: ReadySnapshot) -> CyclePlan:
        ordered = _ascending(snapshot.entries)
        return CyclePlan(tuple(e.pid for e in ordered),
                         range_quantum((e.remaining for e in ordered), floor))

    return PolicyBehavior(descriptor, plan, CYCLE_BOUNDARY, CYCLE_PASS)


# CLI-facing policy registry.  Paper-style parameterization is the default:
# rr:q=25, rp5:base=25, mrr:floor=25.
_FACTORIES = {
    "rr": (make_round_robin, {"q": 25}),
    "dabrr": (make_dabrr, {}),
    "sarr": (make_sarr, {}),
    "dqrrr": (make_dqrrr, {}),
    "irrvq": (make_irrvq, {}),
    "rp5": (make_rp5, {"base": 25}),
    "mrr": (make_mrr, {"floor": 25}),
}


def parse_policy_spec(text: str) -> PolicyBehavior:
    """Build a policy from a spec string such as ``rr:q=25`` or ``dabrr``.

    Parameters are comma-separated ``key=value`` pairs after a colon;
    omitted parameters fall back to the defaults above.
    """
    name, _, param_text = text.strip().partition(":")
    key = name.strip().lower()
    if key not in _FACTORIES:
        raise PolicySpecError(
            f"unknown policy {name!r}; expected one of {', '.join(sorted(_FACTORIES))}")
    factory, defaults = _FACTORIES[key]
    params = dict(defaults)
    if param_text:
        for item in param_text.split(","):
            pkey, eq, value = item.partition("=")
            pkey = pkey.strip()
            if not eq or pkey not in defaults:
                raise PolicySpecError(f"bad parameter {item!r} for policy {key}")
            try:
                params[pkey] = int(value)
            except ValueError:
                raise PolicySpecError(
                    f"parameter {pkey!r} of policy {key} must be an integer, "
                    f"got {value!r}") from None
    return factory(**params)


def standard_policy(name: str) -> PolicyBehavior:
    """The benchmark parameterization of a policy, by canonical name."""
    return parse_policy_spec(name.lower())
