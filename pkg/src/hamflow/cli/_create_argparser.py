# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser
from typing import NoReturn
import sys

from ._common import EXIT_USAGE, SubparserGroup

from ._canon import populate_argparser as populate_canon_subparser
from ._orbits import populate_argparser as populate_orbits_subparser
from ._train import populate_argparser as populate_train_subparser
from ._eval import populate_argparser as populate_eval_subparser
from ._detect import populate_argparser as populate_detect_subparser
from ._indices import populate_argparser as populate_indices_subparser


class HamflowArgumentParser(ArgumentParser):
    """An ArgumentParser whose usage errors exit with code 1; 2 is reserved for data errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# Every leaf subcommand sets a default 'func' taking the parsed arguments.
# After parsing, we call that `func` argument of the resulting args object.


def create_argparser() -> ArgumentParser:
    """Generate the root argparser for the CLI"""
    parser = HamflowArgumentParser(prog="hamflow", usage="hamflow <command> [arguments]")
    parser.set_defaults(func=lambda _: parser.print_help())
    subcommands = SubparserGroup(
        parser,
        title="commands",
    )
    populate_canon_subparser(subcommands)
    populate_orbits_subparser(subcommands)
    populate_train_subparser(subcommands)
    populate_eval_subparser(subcommands)
    populate_detect_subparser(subcommands)
    populate_indices_subparser(subcommands)
    return parser
