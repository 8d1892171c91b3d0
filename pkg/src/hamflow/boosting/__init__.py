# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._adaboost import (
    MIN_ROUND_ERROR,
    BoostingRun,
    RoundReport,
    adaboost,
    boost,
    initial_weights,
)
from ._classifier import BoostRound, StrongClassifier, classify
from ._roc import ROC_HEADER, Confusion, RocCurve, RocPoint, confusion, roc
from ._stumps import STUMP_BLOCK_SIZE, Stump, StumpSearch, train_stump

__all__ = [
    "MIN_ROUND_ERROR",
    "ROC_HEADER",
    "STUMP_BLOCK_SIZE",
    "BoostRound",
    "BoostingRun",
    "Confusion",
    "RocCurve",
    "RocPoint",
    "RoundReport",
    "StrongClassifier",
    "Stump",
    "StumpSearch",
    "adaboost",
    "boost",
    "classify",
    "confusion",
    "initial_weights",
    "roc",
    "train_stump",
]
