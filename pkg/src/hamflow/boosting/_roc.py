# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Optional, Union

import numpy as np

from ..features import FeatureMatrix
from .._errors import DataError
from .._tables import format_csv, write_csv
from ._classifier import StrongClassifier

ROC_HEADER = ("threshold", "fpr", "tpr")


class RocPoint(NamedTuple):
    threshold: float
    fpr: float
    tpr: float


@dataclass(frozen=True)
class RocCurve:
    """Operating points for raw-score thresholds, strictly decreasing from +inf."""

    points: tuple[RocPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(RocPoint(*point) for point in self.points)
        for earlier, later in zip(points, points[1:]):
            if not later.threshold < earlier.threshold:
                raise DataError("ROC thresholds must be strictly decreasing.")
            if later.fpr < earlier.fpr or later.tpr < earlier.tpr:
                raise DataError("ROC rates must not decrease as the threshold drops.")
        if any(not (0 <= p.fpr <= 1 and 0 <= p.tpr <= 1) for p in points):
            raise DataError("ROC rates must lie in [0, 1].")
        object.__setattr__(self, "points", points)

    def auc(self) -> float:
        """Trapezoidal area under the curve."""
        return math.fsum(
            0.5 * (b.fpr - a.fpr) * (a.tpr + b.tpr) for a, b in zip(self.points, self.points[1:])
        )

    def to_csv(self, comment: Optional[str] = None) -> str:
        return format_csv(ROC_HEADER, self.points, comment)

    def write_csv(self, path: Union[str, Path], comment: Optional[str] = None) -> None:
        write_csv(path, ROC_HEADER, self.points, comment)


def _check_both_classes(labels: np.ndarray) -> tuple[int, int]:
    positives = int(labels.sum())
    negatives = labels.size - positives
    if positives == 0 or negatives == 0:
        raise DataError(
            f"Evaluation needs both classes; got {positives} positive and {negatives} "
            "negative rows."
        )
    return positives, negatives


def roc(classifier: StrongClassifier, matrix: FeatureMatrix) -> RocCurve:
    """
    Sweeps the decision threshold over +inf and every distinct score, predicting positive
    iff score >= threshold, so the curve runs from (0, 0) to (1, 1).

    Raises:
        DataError if the matrix has only one class
    """
    labels = matrix.labels
    positives, negatives = _check_both_classes(labels)
    scores = classifier.scores(matrix.values)
    points = [RocPoint(math.inf, 0.0, 0.0)]
    for threshold in np.unique(scores)[::-1].tolist():
        accepted = scores >= threshold
        points.append(
            RocPoint(
                threshold,
                int(np.sum(accepted & (labels == 0))) / negatives,
                int(np.sum(accepted & (labels == 1))) / positives,
            )
        )
    return RocCurve(tuple(points))


@dataclass(frozen=True)
class Confusion:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def accuracy(self) -> float:
        total = self.tp + self.fp + self.tn + self.fn
        return (self.tp + self.tn) / total if total else 0.0


def confusion(classifier: StrongClassifier, matrix: FeatureMatrix) -> Confusion:
    """Counts at the classifier's own decision threshold."""
    predicted = classifier.margins(matrix.values) >= 0
    actual = matrix.labels == 1
    return Confusion(
        tp=int(np.sum(predicted & actual)),
        fp=int(np.sum(predicted & ~actual)),
        tn=int(np.sum(~predicted & ~actual)),
        fn=int(np.sum(~predicted & actual)),
    )
