# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from pathlib import Path

import numpy as np
import pytest

from hamflow.boosting import BoostRound, StrongClassifier, Stump
from hamflow.cli._common import artifact_metadata, RunConfig, write_json
from hamflow.cli._common._models import file_sha256
from hamflow.cli._train._train_command import do_train
from hamflow.features import build_feature_bank, write_bank_json

from . import BOWL, FACE_SIZE, make_args, toy_face
from synthetic_fields import write_pgm


@pytest.fixture(scope="function")
def toy_manifest(tmp_path: Path) -> Path:
    """
    Eight faces (six train, two test) that differ only by a brightness offset, and eight
    uniform-noise non-faces, as 16x16 PGMs listed in a manifest.
    """
    rng = np.random.default_rng(7)
    lines = ["path,label,split"]
    (tmp_path / "faces").mkdir(exist_ok=True)
    (tmp_path / "clutter").mkdir(exist_ok=True)
    for k in range(8):
        split = "train" if k < 6 else "test"
        write_pgm(tmp_path / "faces" / f"face_{k}.pgm", toy_face(k))
        lines.append(f"faces/face_{k}.pgm,face,{split}")
    for k in range(8):
        split = "train" if k < 6 else "test"
        write_pgm(
            tmp_path / "clutter" / f"noise_{k}.pgm", rng.integers(0, 256, (FACE_SIZE, FACE_SIZE))
        )
        lines.append(f"clutter/noise_{k}.pgm,nonface,{split}")
    manifest = tmp_path / "manifest.csv"
    manifest.write_text("\n".join(lines) + "\n")
    return manifest


@pytest.fixture(scope="function")
def bowl_model(tmp_path: Path) -> Path:
    """
    A one-round model that accepts a window only when the first density column of a bank
    built on a 20x20 bowl is exactly zero.
    """
    bank = build_feature_bank(BOWL)
    metadata = artifact_metadata(RunConfig())
    bank_path = tmp_path / "bowl.bank.json"
    write_bank_json(bank, bank_path, metadata)
    classifier = StrongClassifier.from_rounds(
        [BoostRound(Stump(0, 1e-6, 1), 1.0, bank.column_ids[0])]
    )
    model_path = tmp_path / "bowl.json"
    write_json(
        model_path,
        {
            **metadata,
            "features": "hamiltonian",
            "window": list(bank.lattice),
            "normalize_windows": False,
            **classifier.to_dict(),
            "bank_reference": {"path": bank_path.name, "sha256": file_sha256(bank_path)},
        },
    )
    return model_path


@pytest.fixture(scope="function")
def normalized_model(toy_manifest: Path) -> Path:
    """A three-round model trained on the toy manifest with per-window standardisation."""
    config = toy_manifest.parent / "normalized.yaml"
    config.write_text("normalize_windows: true\n")
    model = toy_manifest.parent / "models" / "normalized.json"
    do_train(
        make_args(
            manifest=toy_manifest,
            model=model,
            features="hamiltonian",
            rounds=3,
            canonical=None,
            patch_cache=None,
            config=config,
        )
    )
    return model
