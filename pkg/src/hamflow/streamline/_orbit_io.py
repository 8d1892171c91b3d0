# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import base64
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union
from xml.sax.saxutils import escape

from ._tracing import Orbit
from ..landscape import ScalarField, encode_png
from .._errors import DataError

CLOSED_STROKE = "#e4572e"
OPEN_STROKE = "#2e86de"


def orbit_to_dict(orbit: Orbit) -> dict[str, Any]:
    return {
        "points": [[p.col, p.row] for p in orbit.points],
        "closed": orbit.closed,
        "seed_index": orbit.seed_index,
        "seed_level": orbit.seed_level,
    }


def orbit_from_dict(data: dict[str, Any]) -> Orbit:
    """
    Raises:
        DataError if the entry is malformed
    """
    try:
        points = tuple((int(col), int(row)) for col, row in data["points"])
        closed = bool(data["closed"])
        seed_index = int(data.get("seed_index", 0))
        seed_level = float(data.get("seed_level", 0.0))
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"Malformed orbit entry: {str(exc)}")
    # Raises: DataError
    return Orbit(points=points, closed=closed, seed_index=seed_index, seed_level=seed_level)


def orbits_to_document(
    orbits: Sequence[Orbit], metadata: Optional[dict[str, Any]] = None
) -> dict[str, Any]:
    document: dict[str, Any] = dict(metadata or {})
    document["orbits"] = [orbit_to_dict(orbit) for orbit in orbits]
    return document


def orbits_from_document(document: Union[dict[str, Any], list]) -> list[Orbit]:
    """Accepts either a bare array of orbit entries or an object holding one under 'orbits'."""
    entries = document.get("orbits") if isinstance(document, dict) else document
    if not isinstance(entries, list):
        raise DataError("Orbit document must be a list of orbits or contain an 'orbits' list.")
    return [orbit_from_dict(entry) for entry in entries]


def write_orbits_json(
    path: Union[str, Path], orbits: Sequence[Orbit], metadata: Optional[dict[str, Any]] = None
) -> None:
    Path(path).write_text(
        json.dumps(orbits_to_document(orbits, metadata), indent=1) + "\n", encoding="utf-8"
    )


def read_orbits_json(path: Union[str, Path]) -> list[Orbit]:
    """
    Raises:
        DataError if the file is missing or malformed
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"'{str(path)}' does not exist or is not a file.")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"Could not read orbits from '{str(path)}': {str(exc)}")
    return orbits_from_document(document)


def _coordinates(orbit: Orbit, scale: float) -> str:
    return " ".join(f"{(p.col + 0.5) * scale:g},{(p.row + 0.5) * scale:g}" for p in orbit.points)


def render_svg_overlay(
    background: ScalarField,
    orbits: Iterable[Orbit],
    *,
    scale: float = 4.0,
    comment: str = "",
    boxes: Iterable[tuple[int, int, int, int]] = (),
) -> str:
    """
    SVG drawing of `background` with closed orbits as polygons and open orbits as
    polylines (in different strokes), plus optional (x, y, w, h) boxes.
    """
    width, height = background.width * scale, background.height * scale
    image = base64.b64encode(encode_png(background, rescale=True)).decode("ascii")
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
    ]
    if comment:
        lines.append(f"<!-- {escape(comment)} -->")
    lines.append(
        f'<image width="{width:g}" height="{height:g}" preserveAspectRatio="none" '
        f'style="image-rendering:pixelated" href="data:image/png;base64,{image}"/>'
    )
    for index, orbit in enumerate(orbits):
        tag, stroke = ("polygon", CLOSED_STROKE) if orbit.closed else ("polyline", OPEN_STROKE)
        lines.append(
            f'<{tag} id="orbit-{index}" points="{_coordinates(orbit, scale)}" fill="none" '
            f'stroke="{stroke}" stroke-width="1"/>'
        )
    for x, y, w, h in boxes:
        lines.append(
            f'<rect x="{x * scale:g}" y="{y * scale:g}" width="{w * scale:g}" '
            f'height="{h * scale:g}" fill="none" stroke="#27ae60" stroke-width="2"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
