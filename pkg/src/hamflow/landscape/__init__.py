# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._fields import (
    EPS_STATIONARY,
    DirectionField,
    ScalarField,
    VectorField,
    average_image,
    derive_systems,
    gradient,
    normalize,
    smooth,
    standardize,
)
from ._image_io import (
    encode_png,
    load_scalar_field,
    save_field_cache,
    save_pgm,
    save_png,
)

__all__ = [
    "EPS_STATIONARY",
    "DirectionField",
    "ScalarField",
    "VectorField",
    "average_image",
    "derive_systems",
    "encode_png",
    "gradient",
    "load_scalar_field",
    "normalize",
    "save_field_cache",
    "save_pgm",
    "save_png",
    "smooth",
    "standardize",
]
