# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from pathlib import Path

from .._common import (
    HamflowCliResult,
    artifact_comment,
    load_model,
    prepare_images,
    print_cli_result,
    run_config_from_args,
)
from ..._errors import DataError
from ...boosting import confusion, roc
from ...dataset import Split, load_images, load_manifest
from ...features import feature_matrix


@dataclass
class EvalResult(HamflowCliResult):
    split: str
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    auc: float
    roc: str

    def __str__(self) -> str:
        return f"""
--- Evaluation on the {self.split} split ---

{self.message}

fn: {self.fn}  fp: {self.fp}  tp: {self.tp}  tn: {self.tn}
Accuracy: {self.accuracy:.4f}
ROC AUC: {self.auc:.4f}
ROC curve: {self.roc}
"""


def add_eval_arguments(eval_parser: ArgumentParser) -> None:
    eval_parser.add_argument(
        "--out-prefix",
        type=Path,
        required=True,
        metavar="PREFIX",
        help="The ROC curve is written to PREFIX.roc.csv.",
    )
    eval_parser.add_argument(
        "--split",
        choices=[split.value for split in Split],
        default=Split.TEST.value,
        help="Which split of the manifest to evaluate on.",
    )


@print_cli_result
def do_eval(args: Namespace) -> HamflowCliResult:
    """
    Scores every image of the chosen split with the model and sweeps its threshold.
    """
    # Raises: UsageError
    config = run_config_from_args(args)
    # Raises: DataError
    bundle = load_model(args.model)
    # Raises: DataError
    manifest = load_manifest(args.manifest)
    split = Split(args.split)
    entries = manifest.select(split=split)
    if not entries:
        raise DataError(f"The manifest has no images in the {split.value} split.")
    images = prepare_images(load_images(entries, config.threads), bundle.normalize_windows)
    labels = [entry.label.target for entry in entries]
    # Raises: DataError
    matrix = feature_matrix(bundle.provider, images, labels, threads=config.threads)
    counts = confusion(bundle.classifier, matrix)
    # Raises: DataError
    curve = roc(bundle.classifier, matrix)

    prefix = Path(args.out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    roc_path = prefix.with_name(prefix.name + ".roc.csv")
    curve.write_csv(roc_path, artifact_comment(config))
    return EvalResult(
        status="success",
        message=f"Evaluated {matrix.n_samples} images "
        f"({matrix.positives} faces, {matrix.negatives} non-faces).",
        split=split.value,
        tp=counts.tp,
        fp=counts.fp,
        tn=counts.tn,
        fn=counts.fn,
        accuracy=counts.accuracy,
        auc=curve.auc(),
        roc=str(roc_path),
    )
