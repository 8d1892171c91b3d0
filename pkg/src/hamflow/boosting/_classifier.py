# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Any, NamedTuple, Optional, Sequence

import numpy as np

from .._errors import DataError
from ._stumps import Stump


class BoostRound(NamedTuple):
    stump: Stump
    alpha: float
    feature_id: str = ""


@dataclass(frozen=True)
class StrongClassifier:
    """
    Weighted vote of stumps: positive iff sum(alpha_t * h_t(x)) >= decision_threshold.
    """

    rounds: tuple[BoostRound, ...]
    decision_threshold: float

    def __post_init__(self) -> None:
        rounds = tuple(BoostRound(*item) for item in self.rounds)
        if not rounds:
            raise DataError("A strong classifier needs at least one round.")
        for item in rounds:
            if not (math.isfinite(item.alpha) and item.alpha > 0):
                raise DataError(f"Round weights must be finite and positive, got {item.alpha}.")
        object.__setattr__(self, "rounds", rounds)

    @classmethod
    def from_rounds(cls, rounds: Sequence[BoostRound]) -> StrongClassifier:
        """A classifier with the default threshold, half the total round weight."""
        return cls(tuple(rounds), 0.5 * math.fsum(item.alpha for item in rounds))

    @property
    def alpha_total(self) -> float:
        return math.fsum(item.alpha for item in self.rounds)

    @property
    def feature_indices(self) -> tuple[int, ...]:
        return tuple(item.stump.feature_idx for item in self.rounds)

    def with_threshold(self, decision_threshold: float) -> StrongClassifier:
        return replace(self, decision_threshold=decision_threshold)

    def _check_width(self, width: int) -> None:
        needed = max(self.feature_indices) + 1
        if width < needed:
            raise DataError(
                f"The classifier reads feature {needed - 1} but only {width} features are given."
            )

    def scores(self, values: np.ndarray) -> np.ndarray:
        """
        Raw votes sum(alpha_t * h_t(x)) for every row of a feature matrix, accumulated in
        round order.

        Raises:
            DataError if a referenced feature column is missing
        """
        values = np.atleast_2d(np.asarray(values, dtype=np.float64))
        self._check_width(values.shape[1])
        total = np.zeros(values.shape[0], dtype=np.float64)
        for item in self.rounds:
            total += item.alpha * item.stump.predict(values[:, item.stump.feature_idx])
        return total

    def margins(self, values: np.ndarray) -> np.ndarray:
        return self.scores(values) - self.decision_threshold

    def to_dict(self) -> dict[str, Any]:
        return {
            "rounds": [
                {
                    "feature_idx": item.stump.feature_idx,
                    "feature_id": item.feature_id,
                    "threshold": item.stump.threshold,
                    "polarity": item.stump.polarity,
                    "alpha": item.alpha,
                }
                for item in self.rounds
            ],
            "decision_threshold": self.decision_threshold,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> StrongClassifier:
        try:
            fields = [
                (
                    int(item["feature_idx"]),
                    float(item["threshold"]),
                    int(item["polarity"]),
                    float(item["alpha"]),
                    str(item.get("feature_id", "")),
                )
                for item in data["rounds"]
            ]
            decision_threshold = float(data["decision_threshold"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"Malformed classifier: {exc}") from exc
        # Raises: DataError
        rounds = [
            BoostRound(Stump(feature_idx, threshold, polarity), alpha, feature_id)
            for feature_idx, threshold, polarity, alpha, feature_id in fields
        ]
        return cls(tuple(rounds), decision_threshold)


def classify(
    classifier: StrongClassifier, features: Sequence[float], threshold: Optional[float] = None
) -> tuple[int, float]:
    """
    (label, margin) of one feature vector; margin 0 counts as positive.

    Raises:
        DataError if the vector lacks a feature the classifier reads
    """
    score = float(classifier.scores(np.asarray(features, dtype=np.float64).reshape(1, -1))[0])
    margin = score - (classifier.decision_threshold if threshold is None else threshold)
    return (1 if margin >= 0 else 0), margin
