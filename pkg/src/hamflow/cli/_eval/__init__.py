# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._eval_command import add_eval_arguments, do_eval
from .._common import add_common_arguments, CommonArgument, SubparserGroup


def populate_argparser(subcommands: SubparserGroup) -> None:
    """Adds the `eval` command and all of its arguments to the given parser."""
    eval_parser = subcommands.add(
        "eval",
        description="Evaluates a trained model on a manifest split: confusion counts at the "
        "model's threshold and the full ROC curve.",
        usage="hamflow eval MODEL MANIFEST --out-prefix PREFIX [arguments]",
    )
    add_common_arguments(eval_parser, {CommonArgument.MODEL, CommonArgument.MANIFEST})
    add_eval_arguments(eval_parser)
    eval_parser.set_defaults(func=do_eval)
