# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union


def _cell(value: Any) -> Any:
    return repr(float(value)) if isinstance(value, float) else value


def format_csv(
    header: Sequence[str], rows: Iterable[Sequence[Any]], comment: Optional[str] = None
) -> str:
    """CSV text with a header row, preceded by an optional '# ...' comment line."""
    buffer = io.StringIO()
    if comment:
        buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def write_csv(
    path: Union[str, Path],
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comment: Optional[str] = None,
) -> None:
    Path(path).write_text(format_csv(header, rows, comment), encoding="utf-8")


def read_csv_rows(text: str) -> list[dict[str, str]]:
    """Parses CSV text written by `format_csv`, skipping '#' comment lines."""
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(lines))
