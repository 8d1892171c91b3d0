# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator, Optional, Protocol, Sequence, Union

import numpy as np

from ..landscape import ScalarField
from .._errors import DataError
from .._tables import format_csv, write_csv
from ._templates import check_lattice


class FeatureProvider(Protocol):
    """Anything that turns an image on a fixed lattice into a row of named feature columns."""

    @property
    def lattice(self) -> tuple[int, int]: ...

    @property
    def column_ids(self) -> tuple[str, ...]: ...

    @property
    def column_kinds(self) -> tuple[str, ...]: ...

    @property
    def column_costs(self) -> tuple[int, ...]: ...

    def evaluate(self, img: ScalarField, index: Optional[int] = None) -> np.ndarray: ...

    def to_dict(self) -> dict[str, Any]: ...


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Feature values, one row per image and one column per feature, with 0/1 labels."""

    values: np.ndarray
    labels: np.ndarray
    column_ids: tuple[str, ...]
    column_kinds: tuple[str, ...]

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        labels = np.array(self.labels, dtype=np.int64).reshape(-1)
        if values.size == 0 and values.ndim != 2:
            values = values.reshape(labels.size, len(self.column_ids))
        if values.shape != (labels.size, len(self.column_ids)):
            raise DataError(
                f"Feature matrix is {values.shape[0]}x{values.shape[1]} but has "
                f"{labels.size} labels and {len(self.column_ids)} column ids."
            )
        if len(self.column_kinds) != len(self.column_ids):
            raise DataError("Every feature column needs a kind.")
        if not np.all(np.isfinite(values)):
            raise DataError("Feature matrix contains non-finite values.")
        if not np.all((labels == 0) | (labels == 1)):
            raise DataError("Labels must be 0 (non-face) or 1 (face).")
        values.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "column_ids", tuple(self.column_ids))
        object.__setattr__(self, "column_kinds", tuple(self.column_kinds))

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.values.shape[1])

    @property
    def positives(self) -> int:
        return int(self.labels.sum())

    @property
    def negatives(self) -> int:
        return self.n_samples - self.positives

    def hstack(self, other: FeatureMatrix) -> FeatureMatrix:
        """
        Concatenates the columns of two matrices over the same images.

        Raises:
            DataError if the labels differ or column ids collide
        """
        if not np.array_equal(self.labels, other.labels):
            raise DataError("Only matrices over the same labelled images can be concatenated.")
        clashes = set(self.column_ids) & set(other.column_ids)
        if clashes:
            raise DataError(f"Duplicate feature columns: {sorted(clashes)[:5]}")
        return FeatureMatrix(
            values=np.hstack([self.values, other.values]),
            labels=self.labels,
            column_ids=self.column_ids + other.column_ids,
            column_kinds=self.column_kinds + other.column_kinds,
        )

    def _csv_rows(self) -> Iterator[list[Any]]:
        for label, row in zip(self.labels, self.values):
            yield [int(label), *(float(value) for value in row)]

    def to_csv(self, comment: Optional[str] = None) -> str:
        return format_csv(["label", *self.column_ids], self._csv_rows(), comment)

    def write_csv(self, path: Union[str, Path], comment: Optional[str] = None) -> None:
        write_csv(path, ["label", *self.column_ids], self._csv_rows(), comment)


def feature_matrix(
    provider: FeatureProvider,
    imgs: Sequence[ScalarField],
    labels: Sequence[int],
    threads: int = 1,
) -> FeatureMatrix:
    """
    Evaluates every provider column on every image. Rows keep the order of `imgs` at any
    thread count.

    Raises:
        DataError if an image does not match the provider lattice (naming its index) or the
        labels are not aligned with the images
    """
    if len(labels) != len(imgs):
        raise DataError(f"{len(labels)} labels for {len(imgs)} images.")
    for index, img in enumerate(imgs):
        check_lattice(provider.lattice, img, index)

    def row(index: int) -> np.ndarray:
        return provider.evaluate(imgs[index], index)

    if threads > 1 and len(imgs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(len(imgs))))
    else:
        rows = [row(index) for index in range(len(imgs))]
    width = len(provider.column_ids)
    values = np.vstack(rows) if rows else np.zeros((0, width), dtype=np.float64)
    return FeatureMatrix(
        values=values,
        labels=np.asarray(labels, dtype=np.int64),
        column_ids=provider.column_ids,
        column_kinds=provider.column_kinds,
    )
