# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .._errors import DataError

# Columns scanned together; fixed so results never depend on the thread count.
STUMP_BLOCK_SIZE = 256
WEIGHT_TOLERANCE = 1e-9
# Weighted errors closer than this are ties; cumulative sums differ by rounding only.
ERROR_TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Stump:
    """Predicts 1 iff polarity * value < polarity * threshold."""

    feature_idx: int
    threshold: float
    polarity: int

    def __post_init__(self) -> None:
        if self.polarity not in (-1, 1):
            raise DataError(f"Stump polarity must be -1 or +1, got {self.polarity}.")
        if self.feature_idx < 0:
            raise DataError(f"Stump feature index must be >= 0, got {self.feature_idx}.")

    def predict(self, values: np.ndarray) -> np.ndarray:
        """0/1 predictions for a column of values of this stump's feature."""
        values = np.asarray(values, dtype=np.float64)
        return (self.polarity * values < self.polarity * self.threshold).astype(np.int64)


def _check_labels_and_weights(labels: np.ndarray, weights: np.ndarray, samples: int) -> None:
    if labels.shape != (samples,) or weights.shape != (samples,):
        raise DataError(
            f"Stump training needs equally long inputs: {samples} values, "
            f"{labels.size} labels, {weights.size} weights."
        )
    if not np.all((labels == 0) | (labels == 1)):
        raise DataError("Labels must be 0 or 1.")
    if np.any(weights < 0) or abs(math.fsum(weights.tolist()) - 1.0) > WEIGHT_TOLERANCE:
        raise DataError("Sample weights must be non-negative and sum to 1.")


class StumpSearch:
    """
    Exhaustive threshold search over every column of a fixed value matrix. The per-column
    sort order is computed once; each call scans all columns under new weights.
    """

    def __init__(self, values: np.ndarray, threads: int = 1, block_size: int = STUMP_BLOCK_SIZE):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] == 0:
            raise DataError("Stump training needs at least one sample.")
        if values.shape[1] == 0:
            raise DataError("Stump training needs at least one feature column.")
        self.values = values
        self.threads = max(1, threads)
        self.blocks = [
            (start, min(start + block_size, values.shape[1]))
            for start in range(0, values.shape[1], block_size)
        ]
        self.order = np.empty(values.shape, dtype=np.int32)
        for start, stop in self.blocks:
            self.order[:, start:stop] = np.argsort(values[:, start:stop], axis=0, kind="stable")

    def _scan_block(
        self, start: int, stop: int, labels: np.ndarray, weights: np.ndarray
    ) -> tuple[float, int, int, int]:
        """(error, column, candidate, polarity) of the best stump among columns [start, stop)."""
        order = self.order[:, start:stop]
        ordered = np.take_along_axis(self.values[:, start:stop], order, axis=0)
        ordered_labels = labels[order]
        ordered_weights = weights[order]
        samples, width = ordered.shape
        zero = np.zeros((1, width))
        pos_left = np.vstack([zero, np.cumsum(ordered_weights * ordered_labels, axis=0)])
        neg_left = np.vstack([zero, np.cumsum(ordered_weights * (1 - ordered_labels), axis=0)])
        pos_total, neg_total = pos_left[-1], neg_left[-1]
        errors = np.empty((samples + 1, 2, width))
        errors[:, 0, :] = neg_left + (pos_total - pos_left)
        errors[:, 1, :] = pos_left + (neg_total - neg_left)
        # only boundaries between distinct values, plus the two sentinels, are candidates
        interior = np.vstack(
            [np.ones((1, width), bool), ordered[1:] > ordered[:-1], np.ones((1, width), bool)]
        )
        errors[~interior[:, None, :].repeat(2, axis=1)] = np.inf
        errors = errors.reshape(2 * (samples + 1), width)
        # first row within tolerance of the column minimum: smaller threshold, then polarity +1
        best_rows = np.argmax(errors <= errors.min(axis=0) + ERROR_TIE_TOLERANCE, axis=0)
        best_errors = errors[best_rows, np.arange(width)]
        column = int(np.argmax(best_errors <= best_errors.min() + ERROR_TIE_TOLERANCE))
        candidate, polarity_slot = divmod(int(best_rows[column]), 2)
        polarity = 1 if polarity_slot == 0 else -1
        return float(best_errors[column]), start + column, candidate, polarity

    def _threshold(self, column: int, candidate: int) -> float:
        ordered = self.values[self.order[:, column], column]
        if candidate == 0:
            return float(ordered[0]) - 1.0
        if candidate == ordered.size:
            return float(ordered[-1]) + 1.0
        return 0.5 * (float(ordered[candidate - 1]) + float(ordered[candidate]))

    def best(self, labels: np.ndarray, weights: np.ndarray) -> tuple[Stump, float]:
        """
        The stump with the lowest weighted error over all columns. Ties go to the lowest
        feature index, then the smaller threshold, then polarity +1.

        Raises:
            DataError if labels or weights do not fit the value matrix
        """
        labels = np.asarray(labels, dtype=np.int64)
        weights = np.asarray(weights, dtype=np.float64)
        _check_labels_and_weights(labels, weights, self.values.shape[0])

        def scan(block: tuple[int, int]) -> tuple[float, int, int, int]:
            return self._scan_block(block[0], block[1], labels, weights)

        if self.threads > 1 and len(self.blocks) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                results = list(pool.map(scan, self.blocks))
        else:
            results = [scan(block) for block in self.blocks]
        best = results[0]
        for result in results[1:]:
            if result[0] < best[0] - ERROR_TIE_TOLERANCE:
                best = result
        _, column, candidate, polarity = best
        stump = Stump(column, self._threshold(column, candidate), polarity)
        mistakes = stump.predict(self.values[:, column]) != labels
        return stump, math.fsum(weights[mistakes].tolist())


def train_stump(
    values: Sequence[float], labels: Sequence[int], weights: Sequence[float]
) -> tuple[Stump, float]:
    """
    Best single-feature stump under normalized sample weights, scanning midpoints between
    consecutive distinct values plus one sentinel below the minimum and one above the maximum.

    Raises:
        DataError on empty input, misaligned lengths or weights that do not sum to 1
    """
    column = np.asarray(values, dtype=np.float64).reshape(-1, 1)
    return StumpSearch(column).best(np.asarray(labels), np.asarray(weights))
