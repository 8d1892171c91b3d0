# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import json
import math

import pytest

from hamflow import DataError
from hamflow.boosting import BoostRound, StrongClassifier, Stump, classify

# votes for feature 0 below 1 and for feature 1 below 1, one unit each
TWO_VOTES = StrongClassifier.from_rounds(
    [BoostRound(Stump(0, 1.0, 1), 1.0, "a"), BoostRound(Stump(1, 1.0, 1), 1.0, "b")]
)


def test_default_threshold_is_half_the_total_weight():
    assert TWO_VOTES.alpha_total == 2.0
    assert TWO_VOTES.decision_threshold == 1.0
    assert TWO_VOTES.feature_indices == (0, 1)


@pytest.mark.parametrize(
    "features,expected",
    [
        pytest.param([0.0, 0.0], (1, 1.0), id="Both votes"),
        pytest.param([0.0, 5.0], (1, 0.0), id="Margin zero is a face"),
        pytest.param([5.0, 5.0], (0, -1.0), id="No votes"),
    ],
)
def test_classify(features, expected):
    assert classify(TWO_VOTES, features) == expected


def test_classify_with_another_threshold():
    assert classify(TWO_VOTES, [5.0, 5.0], threshold=-math.inf) == (1, math.inf)
    assert classify(TWO_VOTES, [0.0, 0.0], threshold=2.5) == (0, -0.5)


def test_with_threshold_keeps_the_rounds():
    shifted = TWO_VOTES.with_threshold(0.25)

    assert shifted.rounds == TWO_VOTES.rounds
    assert shifted.margins([[5.0, 5.0]]).tolist() == [-0.25]


def test_missing_feature():
    with pytest.raises(DataError, match="reads feature 1 but only 1 features are given"):
        classify(TWO_VOTES, [0.0])


def test_document_roundtrip():
    document = json.loads(json.dumps(TWO_VOTES.to_dict()))

    assert StrongClassifier.from_dict(document) == TWO_VOTES
    assert [item["feature_id"] for item in document["rounds"]] == ["a", "b"]


@pytest.mark.parametrize(
    "document",
    [
        pytest.param({"rounds": []}, id="No threshold"),
        pytest.param({"rounds": [{"feature_idx": 0}], "decision_threshold": 0}, id="Short round"),
        pytest.param(
            {"rounds": [{"feature_idx": "x", "threshold": 0, "polarity": 1, "alpha": 1}]},
            id="Bad index",
        ),
    ],
)
def test_malformed_document(document):
    with pytest.raises(DataError, match="Malformed classifier"):
        StrongClassifier.from_dict(document)


@pytest.mark.parametrize(
    "rounds",
    [
        pytest.param((), id="No rounds"),
        pytest.param((BoostRound(Stump(0, 0.0, 1), 0.0),), id="Zero weight"),
        pytest.param((BoostRound(Stump(0, 0.0, 1), -1.0),), id="Negative weight"),
        pytest.param((BoostRound(Stump(0, 0.0, 1), math.nan),), id="Not a number"),
        pytest.param((BoostRound(Stump(0, 0.0, 1), math.inf),), id="Infinite weight"),
    ],
)
def test_rejects(rounds):
    with pytest.raises(DataError):
        StrongClassifier(rounds, 0.0)
