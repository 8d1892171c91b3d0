# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._detect_command import add_detect_arguments, do_detect
from .._common import add_common_arguments, CommonArgument, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `detect` command and all of its arguments to the given parser."""
    detect_parser = subcommands.add(
        "detect",
        description="Scans an image with a trained model at growing window sizes and reports "
        "the accepted windows after overlap suppression.",
        usage="hamflow detect MODEL IMAGE --out-prefix PREFIX [arguments]",
    )
    add_common_arguments(detect_parser, {CommonArgument.MODEL})
    add_detect_arguments(detect_parser)
    detect_parser.set_defaults(func=do_detect)
