# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._indices_command import add_indices_arguments, do_indices
from .._common import add_common_arguments, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `indices` command and all of its arguments to the given parser."""
    indices_parser = subcommands.add(
        "indices",
        description="Evaluates the Poincare and pseudo Conley indexes of the closed orbits "
        "of an orbit JSON in the negative-gradient flow of an image.",
        usage="hamflow indices IMAGE ORBITS_JSON --out PATH [arguments]",
    )
    add_common_arguments(indices_parser)
    add_indices_arguments(indices_parser)
    indices_parser.set_defaults(func=do_indices)
