# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .._common import (
    HamflowCliResult,
    artifact_comment,
    print_cli_result,
    run_config_from_args,
)
from ..._logs import LOG
from ..._tables import format_csv
from ...landscape import load_scalar_field, smooth
from ...streamline import read_orbits_json
from ...topo_index import INDEX_TABLE_HEADER, OrbitIndexRow, index_table


@dataclass
class IndexRowResult:
    orbit_id: int
    length: int
    poincare: Optional[float]
    continuous_conley: Optional[float]
    discrete_conley: Optional[str]


@dataclass
class IndicesResult(HamflowCliResult):
    evaluated: int
    skipped_open: int
    out: Optional[str] = None
    rows: list[IndexRowResult] = field(default_factory=list)

    def __str__(self) -> str:
        table = "\n".join(
            f"  orbit {row.orbit_id}: length {row.length}, poincare {_fmt(row.poincare)}, "
            f"conley {_fmt(row.continuous_conley)} ({row.discrete_conley or '-'})"
            for row in self.rows
        )
        return f"""
--- Orbit indexes ---

{self.message}

{table}
"""


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:+.3f}"


def add_indices_arguments(indices_parser: ArgumentParser) -> None:
    indices_parser.add_argument(
        "image",
        type=Path,
        action="store",
        help="The image whose negative-gradient flow is evaluated.",
    )
    indices_parser.add_argument(
        "orbits",
        type=Path,
        action="store",
        help="An orbit JSON, e.g. from 'hamflow orbits'.",
    )
    indices_parser.add_argument(
        "--out",
        type=Path,
        metavar="PATH",
        help="Where to write the CSV; printed to stdout when omitted.",
    )


def _to_result(row: OrbitIndexRow) -> IndexRowResult:
    return IndexRowResult(
        orbit_id=row.orbit_id,
        length=row.length,
        poincare=row.poincare,
        continuous_conley=row.continuous_conley,
        discrete_conley=row.discrete_conley,
    )


@print_cli_result
def do_indices(args: Namespace) -> HamflowCliResult:
    """
    Computes the index table for the closed orbits of an orbit document. Open orbits are
    skipped with a warning.
    """
    # Raises: UsageError
    config = run_config_from_args(args)
    # Raises: DataError
    image = load_scalar_field(args.image)
    # Raises: DataError
    orbits = read_orbits_json(args.orbits)
    skipped = 0
    for orbit_id, orbit in enumerate(orbits):
        if not orbit.closed:
            LOG.warning(f"Skipping orbit {orbit_id}: it is open.")
            skipped += 1
    # Raises: DataError
    rows = index_table(
        orbits,
        smooth(image, config.smoothing_sigma),
        config.eps_stationary,
        include_open=False,
    )
    text = format_csv(INDEX_TABLE_HEADER, (row.as_row() for row in rows), artifact_comment(config))
    if args.out is not None:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding="utf-8")
    elif args.output == "human-readable":
        print(text, end="")
    return IndicesResult(
        status="success",
        message=f"Evaluated {len(rows)} closed orbits; skipped {skipped} open orbits.",
        evaluated=len(rows),
        skipped_open=skipped,
        out=str(args.out) if args.out is not None else None,
        rows=[_to_result(row) for row in rows],
    )
