"""ASCII Gantt rendering of execution traces.

Each cycle gets a banner with the quantum in effect, followed by rows of
pid cells with cumulative end-time labels underneath, wrapped to the
requested width.  Idle gaps render as ``--`` cells under an ``idle``
banner.
"""
from __future__ import annotations

from .model import ExecutionTrace

MIN_WIDTH = 40


def _groups(trace: ExecutionTrace):
    """Chronological (banner, cells) groups; cells are (label, end) pairs."""
    events = sorted(
        [(s.start, f"cycle {s.cycle}  <- quantum {s.quantum_in_effect} ->", s.pid, s.end)
         for s in trace.slices]
        + [(g.start, "idle", "--", g.end) for g in trace.idles],
        key=lambda e: e[0])
    groups: list[tuple[str, list[tuple[str, int]]]] = []
    for _, banner, label, end in events:
        if not groups or groups[-1][0] != banner:
            groups.append((banner, []))
        groups[-1][1].append((label, end))
    return groups


def _inner_width(label: str, end: int, row_start: int | None) -> int:
    """Inner width of one cell; the first cell of a row also leaves room
    for the row-start time printed at the left edge of the number line."""
    inner = max(len(label), len(str(end)))
    if row_start is not None:
        inner = max(inner, len(str(row_start)) + len(str(end)) - 2)
    return inner


def _render_row(out: list[str], start: int, cells: list[tuple[str, int]]):
    top = ""
    bottom = str(start)
    for i, (label, end) in enumerate(cells):
        inner = _inner_width(label, end, start if i == 0 else None)
        top += f"| {label:<{inner}} "
        bottom += f"{end:>{len(top) - len(bottom)}}"
    out.append(top + "|")
    out.append(bottom)


def render_gantt(trace: ExecutionTrace, width: int = 80) -> str:
    """Render the trace as monospaced text no wider than ``width`` columns."""
    if width < MIN_WIDTH:
        raise ValueError(f"width must be >= {MIN_WIDTH}, got {width}")
    if not trace.slices:
        return "(empty trace)\n"

    out: list[str] = []
    cursor = min(s.start for s in trace.slices)
    if trace.idles:
        cursor = min(cursor, trace.idles[0].start)

    for banner, cells in _groups(trace):
        out.append(banner)
        row: list[tuple[str, int]] = []
        row_start = cursor
        used = 0
        for label, end in cells:
            first = row_start if not row else None
            cell_width = _inner_width(label, end, first) + 3
            if row and used + cell_width + 1 > width:
                _render_row(out, row_start, row)
                row_start = row[-1][1]
                row = []
                cell_width = _inner_width(label, end, row_start) + 3
                used = 0
            row.append((label, end))
            used += cell_width
            cursor = end
        if row:
            _render_row(out, row_start, row)
    return "\n".join(out) + "\n"
