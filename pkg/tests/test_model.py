import dataclasses

import pytest

from rrsim import (
    DuplicatePid,
    EmptyWorkload,
    NegativeArrival,
    NonPositiveBurst,
    PolicyDescriptor,
    validate_workload,
)

CASE_I_RECORDS = [("P1", 0, 40), ("P2", 0, 55), ("P3", 0, 60),
                  ("P4", 0, 90), ("P5", 0, 102)]


def test_validate_workload_accepts_case_i_records():
    w = validate_workload(CASE_I_RECORDS, label="case I")
    assert len(w) == 5
    assert w.pids() == ("P1", "P2", "P3", "P4", "P5")
    assert [p.burst for p in w] == [40, 55, 60, 90, 102]
    assert w.total_burst() == 347
    assert w.min_arrival() == 0


def test_validate_workload_preserves_submission_order():
    w = validate_workload([("B", 5, 10), ("A", 0, 10), ("C", 5, 1)])
    assert w.pids() == ("B", "A", "C")


def test_duplicate_pid_rejected():
    with pytest.raises(DuplicatePid) as exc:
        validate_workload([("P1", 0, 10), ("P1", 0, 20)])
    assert exc.value.pid == "P1"


def test_zero_burst_rejected():
    with pytest.raises(NonPositiveBurst) as exc:
        validate_workload([("P1", 0, 0)])
    assert exc.value.pid == "P1"


def test_negative_arrival_rejected():
    with pytest.raises(NegativeArrival) as exc:
        validate_workload([("P9", -1, 5)])
    assert exc.value.pid == "P9"


def test_empty_workload_rejected():
    with pytest.raises(EmptyWorkload):
        validate_workload([])


def test_validate_workload_idempotent():
    w = validate_workload(CASE_I_RECORDS)
    again = validate_workload((p.pid, p.arrival, p.burst) for p in w)
    assert again.processes == w.processes


def test_process_spec_is_immutable():
    w = validate_workload(CASE_I_RECORDS)
    with pytest.raises(dataclasses.FrozenInstanceError):
        w.processes[0].burst = 1


def test_policy_descriptor_spec_string():
    assert PolicyDescriptor.of("RR", q=25).spec_string() == "rr:q=25"
    assert PolicyDescriptor.of("DABRR").spec_string() == "dabrr"
    assert PolicyDescriptor.of("RR", q=25).parameter("q") == 25
    with pytest.raises(KeyError):
        PolicyDescriptor.of("DABRR").parameter("q")
