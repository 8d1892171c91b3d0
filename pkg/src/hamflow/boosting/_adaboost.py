# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..features import FeatureMatrix
from .._errors import DataError, NumericError
from .._logs import LOG
from ._classifier import BoostRound, StrongClassifier
from ._stumps import StumpSearch

MIN_ROUND_ERROR = 1e-10


@dataclass(frozen=True)
class RoundReport:
    """What one boosting round selected and how well it did."""

    round: int
    feature_idx: int
    feature_id: str
    kind: str
    threshold: float
    polarity: int
    error: float
    beta: float
    alpha: float
    error_bound: float
    seconds: float


@dataclass
class BoostingRun:
    classifier: StrongClassifier
    reports: list[RoundReport] = field(default_factory=list)

    @property
    def training_error_bound(self) -> float:
        return self.reports[-1].error_bound if self.reports else 1.0


def initial_weights(labels: np.ndarray) -> np.ndarray:
    """1/(2m) for each of the m positives and 1/(2l) for each of the l negatives."""
    positives = int(labels.sum())
    negatives = labels.size - positives
    if positives == 0 or negatives == 0:
        raise DataError(
            f"Boosting needs both classes; got {positives} positive and {negatives} "
            "negative samples."
        )
    return np.where(labels == 1, 0.5 / positives, 0.5 / negatives)


def boost(
    matrix: FeatureMatrix,
    rounds: int,
    threads: int = 1,
    on_round: Optional[Callable[[RoundReport], None]] = None,
) -> BoostingRun:
    """
    Discrete AdaBoost over threshold stumps on the matrix columns. Each round normalizes
    the sample weights, picks the globally best stump, clamps its weighted error into
    [1e-10, 1 - 1e-10] and scales the weights of correctly classified samples by
    beta = error / (1 - error). Training stops early when no stump beats chance.

    Raises:
        DataError if rounds < 1, the matrix has no columns or only one class
        NumericError if not even the first round finds a stump better than chance
    """
    if rounds < 1:
        raise DataError(f"Boosting needs at least one round, got {rounds}.")
    labels = matrix.labels
    weights = initial_weights(labels)
    search = StumpSearch(matrix.values, threads=threads)
    chosen: list[BoostRound] = []
    reports: list[RoundReport] = []
    bound = 1.0
    for index in range(rounds):
        started = time.perf_counter()
        weights = weights / math.fsum(weights.tolist())
        stump, raw_error = search.best(labels, weights)
        if raw_error >= 0.5:
            if not chosen:
                raise NumericError("No stump classifies the training set better than chance.")
            LOG.warning(f"Stopping after {index} rounds: no stump beats chance any more.")
            break
        error = min(max(raw_error, MIN_ROUND_ERROR), 1.0 - MIN_ROUND_ERROR)
        beta = error / (1.0 - error)
        alpha = math.log(1.0 / beta)
        correct = stump.predict(matrix.values[:, stump.feature_idx]) == labels
        weights = np.where(correct, weights * beta, weights)
        bound *= 2.0 * math.sqrt(error * (1.0 - error))
        feature_id = matrix.column_ids[stump.feature_idx]
        chosen.append(BoostRound(stump, alpha, feature_id))
        report = RoundReport(
            round=index + 1,
            feature_idx=stump.feature_idx,
            feature_id=feature_id,
            kind=matrix.column_kinds[stump.feature_idx],
            threshold=stump.threshold,
            polarity=stump.polarity,
            error=error,
            beta=beta,
            alpha=alpha,
            error_bound=bound,
            seconds=time.perf_counter() - started,
        )
        reports.append(report)
        LOG.debug(
            f"Round {report.round}: {feature_id} threshold {stump.threshold:.6g} "
            f"polarity {stump.polarity:+d} error {error:.6g} alpha {alpha:.6g}"
        )
        if on_round is not None:
            on_round(report)
    return BoostingRun(StrongClassifier.from_rounds(chosen), reports)


def adaboost(matrix: FeatureMatrix, rounds: int, threads: int = 1) -> StrongClassifier:
    return boost(matrix, rounds, threads).classifier
