# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import math
from pathlib import Path

import pytest

from hamflow import DataError
from hamflow.boosting import (
    BoostRound,
    Confusion,
    RocCurve,
    RocPoint,
    StrongClassifier,
    Stump,
    confusion,
    roc,
)
from hamflow.features import FeatureMatrix

TWO_VOTES = StrongClassifier.from_rounds(
    [BoostRound(Stump(0, 1.0, 1), 1.0), BoostRound(Stump(1, 1.0, 1), 1.0)]
)


def matrix_of(values, labels) -> FeatureMatrix:
    return FeatureMatrix(values, labels, ("a", "b"), ("toy", "toy"))


# scores 2, 1, 1 and 0
MIXED = matrix_of([[0, 0], [0, 5], [5, 0], [5, 5]], [1, 1, 0, 0])


def test_roc_points():
    curve = roc(TWO_VOTES, MIXED)

    assert curve.points == (
        RocPoint(math.inf, 0.0, 0.0),
        RocPoint(2.0, 0.0, 0.5),
        RocPoint(1.0, 0.5, 1.0),
        RocPoint(0.0, 1.0, 1.0),
    )
    assert curve.auc() == pytest.approx(0.875)


def test_perfect_ranking():
    matrix = matrix_of([[0, 0], [0, 0], [5, 5]], [1, 1, 0])

    curve = roc(TWO_VOTES, matrix)

    assert curve.points[-1][1:] == (1.0, 1.0)
    assert curve.auc() == 1.0


def test_one_class_is_rejected():
    with pytest.raises(DataError, match="Evaluation needs both classes"):
        roc(TWO_VOTES, matrix_of([[0, 0], [5, 5]], [1, 1]))


def test_csv(tmp_path: Path):
    curve = roc(TWO_VOTES, MIXED)
    path = tmp_path / "roc.csv"

    curve.write_csv(path, comment="hamflow test")

    assert path.read_text() == (
        "# hamflow test\n"
        "threshold,fpr,tpr\n"
        "inf,0.0,0.0\n"
        "2.0,0.0,0.5\n"
        "1.0,0.5,1.0\n"
        "0.0,1.0,1.0\n"
    )


@pytest.mark.parametrize(
    "points",
    [
        pytest.param([(1.0, 0.0, 0.0), (1.0, 0.5, 0.5)], id="Repeated threshold"),
        pytest.param([(1.0, 0.5, 0.5), (0.0, 0.25, 1.0)], id="Falling rate"),
        pytest.param([(1.0, 0.0, 0.0), (0.0, 1.0, 1.5)], id="Rate above one"),
    ],
)
def test_curve_rejects(points):
    with pytest.raises(DataError):
        RocCurve(tuple(points))


def test_confusion_at_the_decision_threshold():
    counts = confusion(TWO_VOTES, MIXED)

    assert counts == Confusion(tp=2, fp=1, tn=1, fn=0)
    assert counts.accuracy == 0.75


def test_empty_confusion():
    assert Confusion(0, 0, 0, 0).accuracy == 0.0
