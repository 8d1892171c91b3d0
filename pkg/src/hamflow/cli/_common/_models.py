# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from ...boosting import StrongClassifier
from ...features import FeatureProvider, read_bank_json
from ...landscape import ScalarField, standardize
from ..._errors import DataError


def write_json(path: Union[str, Path], document: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(document, indent=1) + "\n", encoding="utf-8")


def file_sha256(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def prepare_image(img: ScalarField, normalize_windows: bool) -> ScalarField:
    return standardize(img) if normalize_windows else img


def prepare_images(imgs: Sequence[ScalarField], normalize_windows: bool) -> list[ScalarField]:
    return [prepare_image(img, normalize_windows) for img in imgs]


@dataclass(frozen=True, eq=False)
class ModelBundle:
    """A trained classifier together with the feature bank whose columns it reads."""

    classifier: StrongClassifier
    provider: FeatureProvider
    normalize_windows: bool
    document: dict[str, Any]

    @property
    def lattice(self) -> tuple[int, int]:
        return self.provider.lattice


def _read_document(path: Path) -> dict[str, Any]:
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DataError(f"Model file '{path}' does not exist.")
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"Cannot read model '{path}': {exc}")
    if not isinstance(document, dict):
        raise DataError(f"Model file '{path}' must contain a JSON object.")
    return document


def load_model(path: Union[str, Path], bank_path: Optional[Union[str, Path]] = None) -> ModelBundle:
    """
    Loads a model JSON and the feature bank it references. The referenced bank must still
    have the recorded SHA-256; an explicit `bank_path` replaces the reference and must
    provide every column the classifier reads.

    Raises:
        DataError if either file is missing or malformed, or the bank does not match
    """
    path = Path(path)
    document = _read_document(path)
    # Raises: DataError
    classifier = StrongClassifier.from_dict(document)
    reference = document.get("bank_reference") or {}
    if bank_path is None:
        if "path" not in reference:
            raise DataError(f"Model '{path}' does not reference a feature bank.")
        bank_path = path.parent / reference["path"]
        if not Path(bank_path).is_file():
            raise DataError(f"Feature bank '{bank_path}' referenced by '{path}' does not exist.")
        if reference.get("sha256") and file_sha256(bank_path) != reference["sha256"]:
            raise DataError(f"Feature bank '{bank_path}' changed since the model was trained.")
    # Raises: DataError
    provider = read_bank_json(bank_path)
    columns = len(provider.column_ids)
    for item in classifier.rounds:
        if item.stump.feature_idx >= columns:
            raise DataError(
                f"The classifier reads feature {item.stump.feature_idx} but the bank only has "
                f"{columns} columns."
            )
        if item.feature_id and provider.column_ids[item.stump.feature_idx] != item.feature_id:
            raise DataError(
                f"Feature {item.stump.feature_idx} of the bank is "
                f"'{provider.column_ids[item.stump.feature_idx]}', the classifier expects "
                f"'{item.feature_id}'."
            )
    return ModelBundle(
        classifier=classifier,
        provider=provider,
        normalize_windows=bool(document.get("normalize_windows", False)),
        document=document,
    )
