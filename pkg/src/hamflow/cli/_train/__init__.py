# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._train_command import add_train_arguments, do_train
from .._common import add_common_arguments, CommonArgument, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `train` command and all of its arguments to the given parser."""
    train_parser = subcommands.add(
        "train",
        description="Builds a feature bank from the canonical image and boosts a strong "
        "classifier over the train split of a manifest.",
        usage="hamflow train MANIFEST --model PATH [arguments]",
    )
    add_common_arguments(train_parser, {CommonArgument.MANIFEST})
    add_train_arguments(train_parser)
    train_parser.set_defaults(func=do_train)
