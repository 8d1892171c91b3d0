# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from ..landscape import ScalarField, average_image
from .._errors import DataError
from .._logs import LOG
from ._manifest import Label, Manifest, Split, load_images


def build_canonical(
    manifest: Manifest,
    split: Split = Split.TRAIN,
    label: Label = Label.FACE,
    threads: int = 1,
) -> ScalarField:
    """
    The pointwise mean of every selected image. Images are assumed to be aligned.

    Raises:
        DataError if nothing matches or the images differ in size
    """
    entries = manifest.select(label=label, split=split)
    if not entries:
        raise DataError(f"The manifest has no {label.value} images in the {split.value} split.")
    LOG.info(f"Averaging {len(entries)} {label.value} images from the {split.value} split.")
    # Raises: DataError
    return average_image(load_images(entries, threads))
