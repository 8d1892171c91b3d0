# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._canon_command import add_canon_arguments, do_canon
from .._common import add_common_arguments, CommonArgument, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `canon` command and all of its arguments to the given parser."""
    canon_parser = subcommands.add(
        "canon",
        description="Averages the aligned face images of a manifest into the canonical image.",
        usage="hamflow canon MANIFEST --out PATH [arguments]",
    )
    add_common_arguments(canon_parser, {CommonArgument.MANIFEST})
    add_canon_arguments(canon_parser)
    canon_parser.set_defaults(func=do_canon)
