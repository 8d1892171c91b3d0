# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from ..landscape import ScalarField, load_scalar_field, save_pgm
from .._errors import DataError


@dataclass(frozen=True, eq=False)
class PatchSampler:
    """
    Crops width x height patches from clutter images at stride-aligned offsets, choosing the
    image and the offset with a generator seeded by `seed`.
    """

    sources: tuple[ScalarField, ...]
    width: int
    height: int
    seed: int = 0
    stride: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))
        if not self.sources:
            raise DataError("Patch sampling needs at least one source image.")
        if self.width < 2 or self.height < 2 or self.stride < 1:
            raise DataError(
                f"Invalid patch geometry {self.width}x{self.height} with stride {self.stride}."
            )
        for index, source in enumerate(self.sources):
            if source.width < self.width or source.height < self.height:
                raise DataError(
                    f"Source image {index} is {source.width}x{source.height}, smaller than "
                    f"the {self.width}x{self.height} patch."
                )


def sample_patches(sampler: PatchSampler, count: int) -> list[ScalarField]:
    """
    Raises:
        DataError if count < 1
    """
    if count < 1:
        raise DataError(f"Patch count must be >= 1, got {count}.")
    rng = np.random.default_rng(sampler.seed)
    patches = []
    for _ in range(count):
        source = sampler.sources[int(rng.integers(len(sampler.sources)))]
        across = (source.width - sampler.width) // sampler.stride + 1
        down = (source.height - sampler.height) // sampler.stride + 1
        x = int(rng.integers(across)) * sampler.stride
        y = int(rng.integers(down)) * sampler.stride
        patches.append(
            ScalarField(source.values[y : y + sampler.height, x : x + sampler.width])
        )
    return patches


def write_patch_cache(patches: list[ScalarField], directory: Union[str, Path]) -> list[Path]:
    """Writes the patches as numbered 8-bit PGMs and returns their paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for index, patch in enumerate(patches):
        path = directory / f"patch_{index:05d}.pgm"
        save_pgm(patch, path)
        paths.append(path)
    return paths


def read_patch_cache(directory: Union[str, Path]) -> list[ScalarField]:
    return [load_scalar_field(path) for path in sorted(Path(directory).glob("patch_*.pgm"))]
