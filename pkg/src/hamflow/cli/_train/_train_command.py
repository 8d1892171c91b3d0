# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from ._training_session import TrainingSession
from .._common import (
    HamflowCliResult,
    RunConfig,
    artifact_metadata,
    prepare_image,
    prepare_images,
    print_cli_result,
    run_config_from_args,
    write_json,
)
from .._common._models import file_sha256
from ..._errors import DataError
from ..._logs import LOG, LogEntry
from ...boosting import BoostingRun, boost, confusion
from ...dataset import (
    Label,
    PatchSampler,
    Split,
    load_images,
    load_manifest,
    sample_patches,
    write_patch_cache,
)
from ...features import (
    CompositeBank,
    FeatureKind,
    FeatureProvider,
    build_feature_bank,
    feature_matrix,
    write_bank_json,
)
from ...haar_baseline import HAAR_COLUMN_KIND, HaarBank
from ...landscape import ScalarField, average_image, load_scalar_field

FEATURE_SETS = ("hamiltonian", "haar", "both")
_STREAMLINE_KINDS = frozenset(kind.value for kind in FeatureKind)


@dataclass
class TrainResult(HamflowCliResult):
    """
    Holds what was trained and how well it fits its training set.
    """

    features: str
    samples: int
    positives: int
    negatives: int
    columns: int
    rounds: int
    selected_kinds: list[str]
    training_error: float
    error_bound: float
    duration: float
    model: str
    bank: str
    report: str
    logs: list[LogEntry] = field(default_factory=list)

    def __str__(self) -> str:
        return f"""
--- Training ---

{self.message}

Features: {self.features} ({self.columns} columns)
Samples: {self.samples} ({self.positives} faces, {self.negatives} non-faces)
Rounds: {self.rounds}
Selected kinds: {', '.join(self.selected_kinds)}
Training error: {self.training_error:.4f} (bound {self.error_bound:.4g})
Duration: {self.duration:.2f} seconds
Model: {self.model}
Report: {self.report}
"""


def add_train_arguments(train_parser: ArgumentParser) -> None:
    train_parser.add_argument(
        "--model",
        type=Path,
        required=True,
        metavar="PATH",
        help="Where to write the model JSON. The feature bank and the training report are "
        "written next to it as <stem>.bank.json and <stem>.report.json.",
    )
    train_parser.add_argument(
        "--features",
        choices=FEATURE_SETS,
        default="hamiltonian",
        help="Streamline features, Haar-like features, or both side by side.",
    )
    train_parser.add_argument(
        "--rounds",
        "-T",
        type=int,
        metavar="T",
        help="Boosting rounds; overrides the config file.",
    )
    train_parser.add_argument(
        "--canonical",
        type=Path,
        metavar="PATH",
        help="A canonical image to use instead of averaging the train faces.",
    )
    train_parser.add_argument(
        "--patch-cache",
        type=Path,
        metavar="DIR",
        help="Also write the sampled negative patches to DIR as PGM files.",
    )


def _sibling(model: Path, suffix: str) -> Path:
    stem = model.name[: -len(".json")] if model.name.endswith(".json") else model.name
    return model.with_name(stem + suffix)


def _negatives(
    sources: list[ScalarField], canonical: ScalarField, config: RunConfig, cache: Optional[Path]
) -> list[ScalarField]:
    """The train non-face images, or patches cropped from them when negative_patches > 0."""
    if config.negative_patches == 0:
        return sources
    if not sources:
        raise DataError("Negative patches need at least one train non-face image to crop from.")
    sampler = PatchSampler(
        tuple(sources), width=canonical.width, height=canonical.height, seed=config.seed
    )
    patches = sample_patches(sampler, config.negative_patches)
    LOG.info(f"Sampled {len(patches)} negative patches from {len(sources)} clutter images.")
    if cache is not None:
        write_patch_cache(patches, cache)
    return patches


def _provider(features: str, canonical: ScalarField, config: RunConfig) -> FeatureProvider:
    if features == "haar":
        return HaarBank.build(canonical.width, canonical.height, config.haar_target_count)
    # Raises: NumericError
    bank = build_feature_bank(canonical, **config.bank_options())
    if features == "hamiltonian":
        return bank
    haar = HaarBank.build(canonical.width, canonical.height, config.haar_target_count)
    return CompositeBank((bank, haar))


def _report(
    run: BoostingRun, provider: FeatureProvider, config: RunConfig, features: str
) -> dict:
    costs = provider.column_costs
    selected = [report.feature_idx for report in run.reports]
    kinds: dict[str, int] = {kind.value: 0 for kind in FeatureKind}
    kinds[HAAR_COLUMN_KIND] = 0
    for report in run.reports:
        kinds[report.kind] = kinds.get(report.kind, 0) + 1
    return {
        **artifact_metadata(config),
        "features": features,
        "columns": len(provider.column_ids),
        "rounds": [asdict(report) for report in run.reports],
        "selected_kinds": kinds,
        "total_orbit_length": sum(
            costs[idx] for idx in selected if provider.column_kinds[idx] in _STREAMLINE_KINDS
        ),
        "haar_lookups": sum(
            costs[idx] for idx in selected if provider.column_kinds[idx] == HAAR_COLUMN_KIND
        ),
        "training_error_bound": run.training_error_bound,
    }


@print_cli_result
def do_train(args: Namespace) -> HamflowCliResult:
    """
    Trains a strong classifier on the train split of a manifest. Faces are the positives;
    non-faces, or patches sampled from them, are the negatives. The canonical image is the
    mean train face unless one is given.
    """
    # Raises: UsageError
    config = run_config_from_args(args, rounds=args.rounds)
    model_path = Path(args.model)
    bank_path = _sibling(model_path, ".bank.json")
    report_path = _sibling(model_path, ".report.json")

    with TrainingSession(should_print_logs=args.verbose) as session:
        # Raises: DataError
        manifest = load_manifest(args.manifest)
        faces = load_images(manifest.select(Label.FACE, Split.TRAIN), config.threads)
        clutter = load_images(manifest.select(Label.NONFACE, Split.TRAIN), config.threads)
        if not faces:
            raise DataError("The train split has no face images.")
        if args.canonical is not None:
            canonical = load_scalar_field(args.canonical)
        else:
            canonical = average_image(faces)
        negatives = _negatives(clutter, canonical, config, args.patch_cache)
        if not negatives:
            raise DataError("The train split has no non-face images.")
        images = prepare_images(faces + negatives, config.normalize_windows)
        labels = [1] * len(faces) + [0] * len(negatives)
        canonical = prepare_image(canonical, config.normalize_windows)

        provider = _provider(args.features, canonical, config)
        LOG.info(
            f"Evaluating {len(provider.column_ids)} features on {len(images)} images "
            f"with {config.threads} threads."
        )
        # Raises: DataError
        matrix = feature_matrix(provider, images, labels, threads=config.threads)
        # Raises: DataError, NumericError
        run = boost(matrix, config.rounds, threads=config.threads)
        counts = confusion(run.classifier, matrix)

    model_path.parent.mkdir(parents=True, exist_ok=True)
    metadata = artifact_metadata(config)
    write_bank_json(provider, bank_path, metadata)
    write_json(
        model_path,
        {
            **metadata,
            "features": args.features,
            "window": list(provider.lattice),
            "normalize_windows": config.normalize_windows,
            **run.classifier.to_dict(),
            "bank_reference": {"path": bank_path.name, "sha256": file_sha256(bank_path)},
        },
    )
    logs = session.get_log_messages()
    training_error = (counts.fp + counts.fn) / matrix.n_samples
    write_json(
        report_path,
        {
            **_report(run, provider, config, args.features),
            "samples": {"positives": matrix.positives, "negatives": matrix.negatives},
            "training_error": training_error,
            "duration_seconds": session.get_duration(),
            "log": [str(entry) for entry in logs],
        },
    )
    return TrainResult(
        status="success",
        message=f"Trained {len(run.reports)} rounds over {matrix.n_features} features.",
        features=args.features,
        samples=matrix.n_samples,
        positives=matrix.positives,
        negatives=matrix.negatives,
        columns=matrix.n_features,
        rounds=len(run.reports),
        selected_kinds=[report.kind for report in run.reports],
        training_error=training_error,
        error_bound=run.training_error_bound,
        duration=session.get_duration(),
        model=str(model_path),
        bank=str(bank_path),
        report=str(report_path),
        logs=logs,
    )
