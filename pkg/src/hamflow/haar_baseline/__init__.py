# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._haar import (
    HAAR_COLUMN_KIND,
    HAAR_PROVIDER,
    HaarBank,
    HaarFeature,
    HaarKind,
    enumerate_haar,
    eval_haar,
    exhaustive_haar_count,
)
from ._integral import IntegralImage, integral

__all__ = [
    "HAAR_COLUMN_KIND",
    "HAAR_PROVIDER",
    "HaarBank",
    "HaarFeature",
    "HaarKind",
    "IntegralImage",
    "enumerate_haar",
    "eval_haar",
    "exhaustive_haar_count",
    "integral",
]
