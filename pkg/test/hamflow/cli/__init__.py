# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import Namespace

import numpy as np

from hamflow.landscape import ScalarField
from synthetic_fields import offset_bowl

# Flags every command accepts, at their argparse defaults
COMMON_DEFAULTS = {
    "output": "human-readable",
    "config": None,
    "threads": None,
    "seed": None,
    "verbose": False,
}

FACE_SIZE = 16

BOWL = offset_bowl(20)


def make_args(**kwargs) -> Namespace:
    return Namespace(**{**COMMON_DEFAULTS, **kwargs})


def toy_face(offset: int) -> np.ndarray:
    """An integer bowl whose gradient vanishes nowhere on the 16x16 lattice."""
    cols, rows = np.meshgrid(np.arange(FACE_SIZE), np.arange(FACE_SIZE), indexing="xy")
    last = FACE_SIZE - 1
    return 100 + ((2 * cols - last) ** 2 + (2 * rows - last) ** 2) // 4 + offset


def embed(window: ScalarField, width: int, height: int, x: int, y: int) -> ScalarField:
    values = np.zeros((height, width))
    values[y : y + window.height, x : x + window.width] = window.values
    return ScalarField(values)
