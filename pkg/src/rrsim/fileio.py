"""Workload file formats: CSV and JSON.

CSV uses the fixed header ``pid,arrival_ms,burst_ms`` (UTF-8, LF or CRLF).
JSON is an object with ``label`` and a ``processes`` array of objects with
``pid``, ``arrival_ms`` and ``burst_ms``.  Serialization is normalized, so
parse/serialize round trips are byte-stable.
"""
from __future__ import annotations

import json

from .model import Workload, validate_workload

CSV_HEADER = "pid,arrival_ms,burst_ms"
CSV = "csv"
JSON = "json"


class ParseError(ValueError):
    """A workload file is malformed; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    return data


def _parse_csv(text: str, label: str) -> Workload:
    lines = text.replace("\r\n", "\n").split("\n")
    if not lines or lines[0].strip() != CSV_HEADER:
        raise ParseError(f"expected header {CSV_HEADER!r}", line=1)
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 3:
            raise ParseError(f"expected 3 fields, got {len(fields)}", line=lineno)
        pid, arrival_text, burst_text = fields
        try:
            arrival, burst = int(arrival_text), int(burst_text)
        except ValueError:
            raise ParseError(f"non-integer time in {line!r}", line=lineno) from None
        records.append((pid, arrival, burst))
    return validate_workload(records, label=label)


def _parse_json(text: str, label: str) -> Workload:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(payload, dict) or "processes" not in payload:
        raise ParseError("expected an object with a 'processes' array")
    procs = payload["processes"]
    if not isinstance(procs, list):
        raise ParseError("'processes' must be an array")
    records = []
    for i, item in enumerate(procs):
        if not isinstance(item, dict):
            raise ParseError(f"process #{i + 1} is not an object")
        try:
            records.append((item["pid"], int(item["arrival_ms"]), int(item["burst_ms"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"process #{i + 1}: {exc!r}") from None
    return validate_workload(records, label=str(payload.get("label", label)))


def parse_workload(data: bytes | str, format: str = CSV, label: str = "") -> Workload:
    """Parse workload bytes in the given format.

    Raises ParseError for malformed input and the validate_workload
    errors for structurally invalid records.
    """
    text = _decode(data)
    if format == CSV:
        return _parse_csv(text, label)
    if format == JSON:
        return _parse_json(text, label)
    raise ValueError(f"unknown workload format {format!r}")


def serialize_workload(workload: Workload, format: str = CSV) -> bytes:
    """Render a workload to normalized CSV or JSON bytes.

    CSV carries only the process records (the label is not representable
    there); JSON round-trips the label too.
    """
    if format == CSV:
        lines = [CSV_HEADER]
        lines.extend(f"{p.pid},{p.arrival},{p.burst}" for p in workload.processes)
        return ("\n".join(lines) + "\n").encode("utf-8")
    if format == JSON:
        payload = {
            "label": workload.label,
            "processes": [
                {"pid": p.pid, "arrival_ms": p.arrival, "burst_ms": p.burst}
                for p in workload.processes
            ],
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    raise ValueError(f"unknown workload format {format!r}")
