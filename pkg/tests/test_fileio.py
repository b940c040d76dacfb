import pytest

from rrsim import DuplicatePid, EmptyWorkload
from rrsim.fileio import CSV, JSON, ParseError, parse_workload, serialize_workload
from rrsim.workloads import benchmark_case

CASE_I_CSV = (
    "pid,arrival_ms,burst_ms\n"
    "P1,0,40\nP2,0,55\nP3,0,60\nP4,0,90\nP5,0,102\n"
)


def test_parse_csv_case_i():
    w = parse_workload(CASE_I_CSV.encode(), CSV)
    assert w.processes == benchmark_case("I").processes


def test_parse_csv_accepts_crlf_and_str_input():
    w = parse_workload(CASE_I_CSV.replace("\n", "\r\n"), CSV)
    assert w.processes == benchmark_case("I").processes


def test_header_only_csv_is_empty_workload():
    with pytest.raises(EmptyWorkload):
        parse_workload(b"pid,arrival_ms,burst_ms\n", CSV)


def test_csv_bad_integer_names_line():
    with pytest.raises(ParseError) as exc:
        parse_workload(b"pid,arrival_ms,burst_ms\nP1,0,abc\n", CSV)
    assert exc.value.line == 2


def test_csv_wrong_field_count_names_line():
    with pytest.raises(ParseError) as exc:
        parse_workload(b"pid,arrival_ms,burst_ms\nP1,0,4\nP2,1\n", CSV)
    assert exc.value.line == 3


def test_csv_requires_exact_header():
    with pytest.raises(ParseError) as exc:
        parse_workload(b"pid,arrival,burst\nP1,0,4\n", CSV)
    assert exc.value.line == 1


def test_csv_validation_errors_propagate():
    with pytest.raises(DuplicatePid):
        parse_workload(b"pid,arrival_ms,burst_ms\nP1,0,4\nP1,0,5\n", CSV)


def test_csv_round_trip_is_byte_stable():
    messy = "pid,arrival_ms,burst_ms\r\nP1, 0, 40\r\nP2,0,55\n\n"
    once = serialize_workload(parse_workload(messy, CSV), CSV)
    twice = serialize_workload(parse_workload(once, CSV), CSV)
    assert once == twice
    assert once == b"pid,arrival_ms,burst_ms\nP1,0,40\nP2,0,55\n"


def test_json_round_trip_preserves_label():
    w = benchmark_case("IV")
    data = serialize_workload(w, JSON)
    back = parse_workload(data, JSON)
    assert back == w
    assert back.label == "case IV"
    assert serialize_workload(back, JSON) == data


def test_parse_json_shape_errors():
    with pytest.raises(ParseError):
        parse_workload(b"[1,2,3]", JSON)
    with pytest.raises(ParseError):
        parse_workload(b'{"processes": [{"pid": "P1"}]}', JSON)
    with pytest.raises(ParseError) as exc:
        parse_workload(b'{"processes": [}', JSON)
    assert exc.value.line == 1


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        parse_workload(b"", "xml")
    with pytest.raises(ValueError):
        serialize_workload(benchmark_case("I"), "xml")
