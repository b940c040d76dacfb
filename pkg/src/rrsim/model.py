"""Domain types shared by the simulator: processes, workloads and traces.

All times are integer milliseconds. Values are frozen after construction,
so they can be shared freely between concurrent simulations.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class WorkloadError(ValueError):
    """A workload record violates a structural invariant."""


class DuplicatePid(WorkloadError):
    def __init__(self, pid: str):
        super().__init__(f"duplicate pid {pid!r}")
        self.pid = pid


class EmptyPid(WorkloadError):
    def __init__(self, record):
        super().__init__(f"empty pid in record {record!r}")
        self.record = record


class NonPositiveBurst(WorkloadError):
    def __init__(self, pid: str, burst: int):
        super().__init__(f"process {pid!r} has non-positive burst {burst}")
        self.pid = pid
        self.burst = burst


class NegativeArrival(WorkloadError):
    def __init__(self, pid: str, arrival: int):
        super().__init__(f"process {pid!r} has negative arrival {arrival}")
        self.pid = pid
        self.arrival = arrival


class EmptyWorkload(WorkloadError):
    def __init__(self):
        super().__init__("workload contains no processes")


@dataclass(frozen=True)
class ProcessSpec:
    """One process: identifier, arrival time (ms) and CPU burst (ms)."""

    pid: str
    arrival: int
    burst: int

    def __post_init__(self):
        if not self.pid:
            raise EmptyPid((self.pid, self.arrival, self.burst))
        if self.arrival < 0:
            raise NegativeArrival(self.pid, self.arrival)
        if self.burst < 1:
            raise NonPositiveBurst(self.pid, self.burst)


@dataclass(frozen=True)
class Workload:
    """An ordered, validated collection of processes.

    The sequence order is the submission order and is authoritative for
    FCFS/arrival tie-breaking; construction never re-sorts it.
    """

    processes: tuple[ProcessSpec, ...]
    label: str = ""

    def __post_init__(self):
        if not self.processes:
            raise EmptyWorkload()
        seen = set()
        for proc in self.processes:
            if proc.pid in seen:
                raise DuplicatePid(proc.pid)
            seen.add(proc.pid)

    def __len__(self) -> int:
        return len(self.processes)

    def __iter__(self):
        return iter(self.processes)

    def pids(self) -> tuple[str, ...]:
        return tuple(p.pid for p in self.processes)

    def by_pid(self) -> dict[str, ProcessSpec]:
        return {p.pid: p for p in self.processes}

    def total_burst(self) -> int:
        return sum(p.burst for p in self.processes)

    def min_arrival(self) -> int:
        return min(p.arrival for p in self.processes)


def validate_workload(records, label: str = "") -> Workload:
    """Build a Workload from (pid, arrival, burst) records.

    Input order is preserved exactly.

    Raises:
        EmptyWorkload: no records were given.
        EmptyPid, NegativeArrival, NonPositiveBurst, DuplicatePid:
            a record is invalid; the exception names the offender.
    """
    procs = tuple(ProcessSpec(str(pid), int(arrival), int(burst))
                  for pid, arrival, burst in records)
    return Workload(processes=procs, label=label)


COMPLETED = "completed"
QUANTUM_EXPIRED = "quantum_expired"


@dataclass(frozen=True)
class Slice:
    """One contiguous dispatch of a process."""

    pid: str
    start: int
    end: int
    cycle: int
    quantum_in_effect: int
    termination: str  # COMPLETED or QUANTUM_EXPIRED

    @property
    def duration(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class IdleGap:
    """An interval during which no admitted process had remaining work."""

    start: int
    end: int


@dataclass(frozen=True)
class PolicyDescriptor:
    """Names a scheduling policy plus its integer parameters."""

    name: str
    parameters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, name: str, **params: int) -> "PolicyDescriptor":
        return cls(name, tuple(sorted(params.items())))

    def parameter(self, key: str) -> int:
        for k, v in self.parameters:
            if k == key:
                return v
        raise KeyError(f"policy {self.name} has no parameter {key!r}")

    def spec_string(self) -> str:
        """Render the CLI form, e.g. ``rr:q=25`` or ``dabrr``."""
        head = self.name.lower()
        if not self.parameters:
            return head
        return head + ":" + ",".join(f"{k}={v}" for k, v in self.parameters)


@dataclass(frozen=True)
class ExecutionTrace:
    """Everything one simulation run produced, in time order."""

    algorithm: PolicyDescriptor
    slices: tuple[Slice, ...]
    idles: tuple[IdleGap, ...] = ()
    quantum_log: tuple[tuple[int, int], ...] = ()  # (cycle index, quantum ms)

    def quanta(self) -> tuple[int, ...]:
        return tuple(q for _, q in self.quantum_log)

    def completion_times(self) -> dict[str, int]:
        done = {}
        for s in self.slices:
            done[s.pid] = s.end
        return done

    def end_time(self) -> int:
        return self.slices[-1].end if self.slices else 0
