# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..landscape import ScalarField
from .._errors import DataError


@dataclass(frozen=True, eq=False)
class IntegralImage:
    """
    (height + 1) x (width + 1) cumulative sums: table[r, c] is the sum of every pixel
    above and left of (r, c). Row 0 and column 0 are zero.
    """

    table: np.ndarray

    @classmethod
    def of_array(cls, values: np.ndarray) -> IntegralImage:
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or 0 in values.shape:
            raise DataError(f"An integral image needs a nonempty 2D array, got {values.shape}.")
        table = np.zeros((values.shape[0] + 1, values.shape[1] + 1), dtype=np.float64)
        table[1:, 1:] = values.cumsum(axis=0).cumsum(axis=1)
        table.setflags(write=False)
        return cls(table)

    @property
    def width(self) -> int:
        return int(self.table.shape[1]) - 1

    @property
    def height(self) -> int:
        return int(self.table.shape[0]) - 1

    def rect_sum(self, x: int, y: int, w: int, h: int) -> float:
        """
        Sum of the w x h rectangle whose top-left pixel is (x, y), in four lookups.

        Raises:
            DataError if the rectangle leaves the image
        """
        if x < 0 or y < 0 or w < 0 or h < 0 or x + w > self.width or y + h > self.height:
            raise DataError(
                f"Rectangle ({x}, {y}, {w}, {h}) leaves the {self.width}x{self.height} image."
            )
        t = self.table
        return float(t[y + h, x + w] - t[y, x + w] - t[y + h, x] + t[y, x])


def integral(field: ScalarField) -> IntegralImage:
    return IntegralImage.of_array(field.values)
