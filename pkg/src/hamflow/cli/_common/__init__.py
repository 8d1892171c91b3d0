# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace, _SubParsersAction
from dataclasses import asdict, dataclass
from enum import Enum
from functools import wraps
from pathlib import Path
from typing import Callable, Literal
import json
import logging
import yaml

from ._config import (
    RunConfig,
    UsageError,
    artifact_comment,
    artifact_metadata,
    load_run_config,
    read_config_file,
)
from ._models import ModelBundle, load_model, prepare_image, prepare_images, write_json
from ..._errors import HamflowError, NumericError
from ..._logs import LOG

__all__ = [
    "EXIT_DATA",
    "EXIT_NUMERIC",
    "EXIT_USAGE",
    "CommonArgument",
    "HamflowCliErrorResult",
    "HamflowCliResult",
    "ModelBundle",
    "RunConfig",
    "SubparserGroup",
    "UsageError",
    "add_common_arguments",
    "artifact_comment",
    "artifact_metadata",
    "load_model",
    "load_run_config",
    "prepare_image",
    "prepare_images",
    "print_cli_result",
    "read_config_file",
    "run_config_from_args",
    "write_json",
]

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


class CommonArgument(Enum):
    """
    Used as literal options for which shared arguments
    a certain command uses.
    """

    MANIFEST = "manifest"
    MODEL = "model"


def add_common_arguments(
    parser: ArgumentParser, common_arg_options: set[CommonArgument] = set()
) -> None:
    """
    Adds the run-wide flags every command accepts, then the positional
    arguments shared by some commands, in a fixed order.
    """
    parser.add_argument(
        "--output",
        choices=["human-readable", "json", "yaml"],
        default="human-readable",
        help="How to format the command's output.",
    )
    parser.add_argument(
        "--config",
        type=Path,
        metavar="PATH",
        help="Run configuration: a JSON or YAML document, or 'key = value' lines.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        metavar="N",
        help="Worker threads for loading, feature evaluation and stump search.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        metavar="N",
        help="Seed for every pseudo-random choice (negative patch sampling).",
    )
    parser.add_argument(
        "--verbose",
        action="store_const",
        const=True,
        default=False,
        help="Log progress and per-round details to stderr.",
    )

    if CommonArgument.MODEL in common_arg_options:
        parser.add_argument(
            "model",
            type=Path,
            action="store",
            help="A model JSON written by 'hamflow train'.",
        )
    if CommonArgument.MANIFEST in common_arg_options:
        parser.add_argument(
            "manifest",
            type=Path,
            action="store",
            help="A CSV manifest with the header path,label,split.",
        )


class SubparserGroup:
    """
    Wraps the `_SubParsersAction` type from the `argparse` library
    so each subcommand can be created & populated in its own module.
    """

    group: _SubParsersAction

    def __init__(self, base: ArgumentParser, **kwargs):
        self.group = base.add_subparsers(**kwargs)

    def add(self, name: str, description: str, **kwargs) -> ArgumentParser:
        return self.group.add_parser(name, description=description, help=description, **kwargs)


def run_config_from_args(args: Namespace, **overrides) -> RunConfig:
    """
    Resolves the run configuration of a parsed command line and applies --verbose.

    Raises:
        UsageError on an invalid config file or flag value
    """
    LOG.setLevel(logging.DEBUG if getattr(args, "verbose", False) else logging.INFO)
    # Raises: UsageError
    return load_run_config(
        getattr(args, "config", None),
        threads=getattr(args, "threads", None),
        seed=getattr(args, "seed", None),
        **overrides,
    )


@dataclass
class HamflowCliResult:
    """
    Denotes the result of a command, including its status (success/error)
    and an accompanying message.

    Commands that report more than a message subclass HamflowCliResult.
    """

    status: Literal["success", "error"]
    message: str

    def __str__(self) -> str:
        return self.message


@dataclass
class HamflowCliErrorResult(HamflowCliResult):
    exit_code: int = EXIT_DATA

    def __str__(self) -> str:
        return f"ERROR: {self.message}"

    @classmethod
    def from_exception(cls, exc: HamflowError) -> "HamflowCliErrorResult":
        if isinstance(exc, UsageError):
            code = EXIT_USAGE
        elif isinstance(exc, NumericError):
            code = EXIT_NUMERIC
        else:
            code = EXIT_DATA
        return cls(status="error", message=str(exc), exit_code=code)


def _asdict_omit_null(attrs: list) -> dict:
    """
    Retrieves a dataclass' attributes in a dictionary, omitting fields that are None or empty.
    Zeros and False are kept.
    """
    return {
        attr: value
        for (attr, value) in attrs
        if value is not None and not (isinstance(value, (str, list, dict)) and len(value) == 0)
    }


def print_cli_result(command: Callable[[Namespace], HamflowCliResult]) -> Callable:
    """
    Runs a `do_<command>` function, turns package errors into error results and prints
    the result in the format chosen with --output. Error results exit the process with
    their exit code.
    """

    @wraps(command)
    def format_results(args: Namespace) -> HamflowCliResult:
        try:
            response = command(args)
        except HamflowError as exc:
            response = HamflowCliErrorResult.from_exception(exc)

        if args.output == "human-readable":
            print(str(response))
        else:
            document = asdict(response, dict_factory=_asdict_omit_null)
            if args.output == "json":
                print(json.dumps(document, indent=4))
            else:
                print(yaml.safe_dump(document, sort_keys=False))

        if response.status == "error":
            raise SystemExit(getattr(response, "exit_code", EXIT_DATA))

        return response

    return format_results
