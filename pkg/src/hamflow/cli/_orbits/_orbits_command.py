# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from pathlib import Path

from .._common import (
    HamflowCliResult,
    artifact_comment,
    artifact_metadata,
    print_cli_result,
    run_config_from_args,
)
from ..._errors import NumericError
from ..._tables import write_csv
from ...landscape import derive_systems, load_scalar_field, normalize, smooth
from ...streamline import (
    extract_all_orbits,
    orbit_statistics,
    render_svg_overlay,
    write_orbits_json,
)
from ...topo_index import INDEX_TABLE_HEADER, index_table


@dataclass
class OrbitsResult(HamflowCliResult):
    orbits: int
    closed: int
    mean_length: float
    median_length: float
    total_length: int
    orbits_json: str
    overlay: str
    indices: str

    def __str__(self) -> str:
        return f"""
--- Orbit extraction ---

{self.message}

Orbits: {self.orbits} ({self.closed} closed)
Length: mean {self.mean_length:.1f}, median {self.median_length:.1f}, total {self.total_length}
Orbits JSON: {self.orbits_json}
Overlay: {self.overlay}
Indexes: {self.indices}
"""


def add_orbits_arguments(orbits_parser: ArgumentParser) -> None:
    orbits_parser.add_argument(
        "image",
        type=Path,
        action="store",
        help="The image to trace: PGM, PNG or a canonical image cache.",
    )
    orbits_parser.add_argument(
        "--out-prefix",
        type=Path,
        required=True,
        metavar="PREFIX",
        help="Outputs are written to PREFIX.orbits.json, PREFIX.svg and PREFIX.indices.csv.",
    )
    orbits_parser.add_argument(
        "--svg-scale",
        type=float,
        default=4.0,
        help="Pixels per lattice point in the SVG overlay.",
    )


@print_cli_result
def do_orbits(args: Namespace) -> HamflowCliResult:
    """
    Extracts all orbits of the image's Hamiltonian flow and evaluates the Poincare and
    pseudo Conley indexes of the closed ones in the negative-gradient flow.
    """
    # Raises: UsageError
    config = run_config_from_args(args)
    # Raises: DataError
    image = load_scalar_field(args.image)
    field = smooth(image, config.smoothing_sigma)
    _, hamiltonian = derive_systems(field)
    orbits = extract_all_orbits(
        normalize(hamiltonian, config.eps_stationary),
        min_len=config.min_orbit_len,
        max_len=config.max_orbit_len,
        levels=field,
    )
    if not orbits:
        raise NumericError(
            f"'{args.image}' has no orbits of at least {config.min_orbit_len} points."
        )

    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    orbits_json = prefix.with_name(prefix.name + ".orbits.json")
    overlay = prefix.with_name(prefix.name + ".svg")
    indices = prefix.with_name(prefix.name + ".indices.csv")
    write_orbits_json(
        orbits_json,
        orbits,
        {**artifact_metadata(config), "width": image.width, "height": image.height},
    )
    overlay.write_text(
        render_svg_overlay(image, orbits, scale=args.svg_scale, comment=artifact_comment(config)),
        encoding="utf-8",
    )
    rows = index_table(orbits, field, config.eps_stationary, include_open=False)
    write_csv(
        indices, INDEX_TABLE_HEADER, (row.as_row() for row in rows), artifact_comment(config)
    )

    stats = orbit_statistics(orbits)
    return OrbitsResult(
        status="success",
        message=str(stats),
        orbits=stats.count,
        closed=stats.closed,
        mean_length=stats.mean_length,
        median_length=stats.median_length,
        total_length=stats.total_length,
        orbits_json=str(orbits_json),
        overlay=str(overlay),
        indices=str(indices),
    )
