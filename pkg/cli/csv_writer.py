"""
CSV output with round-trip float formatting.
"""
import csv
import io
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

Cell = Union[float, int, str]


def format_cell(value: Cell) -> str:
    """Shortest text that parses back to the same double; strings pass through."""
    if isinstance(value, str):
        return value
    return repr(float(value))


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    """CSV text with ``\\n`` line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def write_csv(out: Optional[str], header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    """
    Write CSV to ``out``, or to stdout when ``out`` is None or ``-``.

    Returns:
        str: The written text
    """
    text = render_csv(header, rows)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="")
    return text
