# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._orbits_command import add_orbits_arguments, do_orbits
from .._common import add_common_arguments, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `orbits` command and all of its arguments to the given parser."""
    orbits_parser = subcommands.add(
        "orbits",
        description="Traces every Hamiltonian orbit of an image and writes them as JSON, "
        "an SVG overlay and a CSV of closed-orbit indexes.",
        usage="hamflow orbits IMAGE --out-prefix PREFIX [arguments]",
    )
    add_common_arguments(orbits_parser)
    add_orbits_arguments(orbits_parser)
    orbits_parser.set_defaults(func=do_orbits)
