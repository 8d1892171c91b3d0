# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

import numpy as np

from ..landscape import ScalarField
from .._errors import DataError
from .._logs import LOG
from ._integral import IntegralImage, integral

HAAR_PROVIDER = "haar"
HAAR_COLUMN_KIND = "haar"


class HaarKind(str, Enum):
    TWO_RECT_H = "two_rect_h"
    TWO_RECT_V = "two_rect_v"
    THREE_RECT_H = "three_rect_h"
    THREE_RECT_V = "three_rect_v"
    FOUR_RECT = "four_rect"

    @property
    def tiles(self) -> tuple[int, int]:
        """How many base rectangles the footprint spans across and down."""
        return _TILES[self]

    @property
    def lookups(self) -> int:
        """Integral-image reads per evaluation, four per rectangle."""
        return 4 * len(_PATTERNS[self])


_TILES = {
    HaarKind.TWO_RECT_H: (2, 1),
    HaarKind.TWO_RECT_V: (1, 2),
    HaarKind.THREE_RECT_H: (3, 1),
    HaarKind.THREE_RECT_V: (1, 3),
    HaarKind.FOUR_RECT: (2, 2),
}

# (weight, tile column, tile row) of every base rectangle; white tiles add, black subtract
_PATTERNS = {
    HaarKind.TWO_RECT_H: ((1, 0, 0), (-1, 1, 0)),
    HaarKind.TWO_RECT_V: ((1, 0, 0), (-1, 0, 1)),
    HaarKind.THREE_RECT_H: ((1, 0, 0), (-2, 1, 0), (1, 2, 0)),
    HaarKind.THREE_RECT_V: ((1, 0, 0), (-2, 0, 1), (1, 0, 2)),
    HaarKind.FOUR_RECT: ((1, 0, 0), (-1, 1, 0), (-1, 0, 1), (1, 1, 1)),
}


@dataclass(frozen=True)
class HaarFeature:
    """A Viola-Jones rectangle feature; (x, y, w, h) is its top-left base rectangle."""

    kind: HaarKind
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", HaarKind(self.kind))
        if self.w < 1 or self.h < 1 or self.x < 0 or self.y < 0:
            raise DataError(f"Invalid Haar geometry {self}.")

    @property
    def footprint(self) -> tuple[int, int]:
        across, down = self.kind.tiles
        return (across * self.w, down * self.h)

    @property
    def feature_id(self) -> str:
        return f"haar:{self.kind.value}:{self.x},{self.y},{self.w},{self.h}"

    def rectangles(self) -> list[tuple[int, int, int, int, int]]:
        """(weight, x, y, w, h) of every base rectangle."""
        return [
            (weight, self.x + col * self.w, self.y + row * self.h, self.w, self.h)
            for weight, col, row in _PATTERNS[self.kind]
        ]

    def fits(self, width: int, height: int) -> bool:
        fw, fh = self.footprint
        return self.x + fw <= width and self.y + fh <= height


def eval_haar(feature: HaarFeature, ii: IntegralImage) -> float:
    """
    Weighted rectangle sums: white minus black, balanced so constant images give zero.

    Raises:
        DataError if the footprint leaves the image
    """
    if not feature.fits(ii.width, ii.height):
        raise DataError(
            f"Feature {feature.feature_id} does not fit the {ii.width}x{ii.height} image."
        )
    return float(
        sum(weight * ii.rect_sum(x, y, w, h) for weight, x, y, w, h in feature.rectangles())
    )


def _axis_placements(length: int, tiles: int) -> np.ndarray:
    """Every (offset, base size) along one axis for a footprint of `tiles` base sizes."""
    placements = [
        (offset, size)
        for size in range(1, length // tiles + 1)
        for offset in range(length - tiles * size + 1)
    ]
    return np.array(placements, dtype=np.int64).reshape(-1, 2)


def exhaustive_haar_count(width: int, height: int) -> int:
    return sum(
        len(_axis_placements(width, kind.tiles[0])) * len(_axis_placements(height, kind.tiles[1]))
        for kind in HaarKind
    )


def enumerate_haar(width: int, height: int, target_count: int) -> list[HaarFeature]:
    """
    A deterministic, evenly strided selection of about `target_count` features from the
    exhaustive enumeration ordered by kind, then horizontal placement (size, offset), then
    vertical placement. Index i of the selection is exhaustive index floor(i * total / target).
    A target at or above the exhaustive count returns every feature.

    Raises:
        DataError if target_count < 1
    """
    if target_count < 1:
        raise DataError(f"target_count must be >= 1, got {target_count}.")
    axes = [
        (kind, _axis_placements(width, kind.tiles[0]), _axis_placements(height, kind.tiles[1]))
        for kind in HaarKind
    ]
    sizes = np.array([len(xs) * len(ys) for _, xs, ys in axes], dtype=np.int64)
    total = int(sizes.sum())
    if target_count >= total:
        if target_count > total:
            LOG.warning(
                f"Requested {target_count} Haar features but a {width}x{height} window only "
                f"has {total}; using all of them."
            )
        picks = np.arange(total, dtype=np.int64)
    else:
        picks = (np.arange(target_count, dtype=np.int64) * total) // target_count
    starts = np.concatenate([[0], np.cumsum(sizes)])
    features: list[HaarFeature] = []
    for block, (kind, xs, ys) in enumerate(axes):
        local = picks[(picks >= starts[block]) & (picks < starts[block + 1])] - starts[block]
        ix, iy = np.divmod(local, len(ys)) if len(ys) else (local, local)
        features.extend(
            HaarFeature(kind, int(x), int(y), int(w), int(h))
            for (x, w), (y, h) in zip(xs[ix].tolist(), ys[iy].tolist())
        )
    return features


@dataclass(frozen=True, eq=False)
class HaarBank:
    """Haar feature columns over a fixed window, evaluated together from one integral image."""

    width: int
    height: int
    features: tuple[HaarFeature, ...]
    _rects: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "features", tuple(self.features))
        rects = []
        for index, feature in enumerate(self.features):
            if not feature.fits(self.width, self.height):
                raise DataError(
                    f"Feature {feature.feature_id} does not fit the "
                    f"{self.width}x{self.height} window."
                )
            rects.extend(
                (index, weight, x, y, x + w, y + h)
                for weight, x, y, w, h in feature.rectangles()
            )
        table = np.array(rects, dtype=np.int64).reshape(-1, 6)
        table.setflags(write=False)
        object.__setattr__(self, "_rects", table)

    @classmethod
    def build(cls, width: int, height: int, target_count: int) -> HaarBank:
        return cls(width, height, tuple(enumerate_haar(width, height, target_count)))

    @property
    def lattice(self) -> tuple[int, int]:
        return (self.width, self.height)

    @property
    def column_ids(self) -> tuple[str, ...]:
        return tuple(feature.feature_id for feature in self.features)

    @property
    def column_kinds(self) -> tuple[str, ...]:
        return (HAAR_COLUMN_KIND,) * len(self.features)

    @property
    def column_costs(self) -> tuple[int, ...]:
        """Integral-image lookups of each column."""
        return tuple(feature.kind.lookups for feature in self.features)

    def evaluate(self, img: ScalarField, index: Optional[int] = None) -> np.ndarray:
        """
        Raises:
            DataError if `img` is not the window size
        """
        if img.shape != self.lattice:
            where = "Image" if index is None else f"Image {index}"
            raise DataError(
                f"{where} is {img.width}x{img.height}, the Haar window is "
                f"{self.width}x{self.height}."
            )
        t = integral(img).table
        owner, weight, x0, y0, x1, y1 = self._rects.T
        sums = t[y1, x1] - t[y0, x1] - t[y1, x0] + t[y0, x0]
        return np.bincount(owner, weights=weight * sums, minlength=len(self.features))

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": HAAR_PROVIDER,
            "width": self.width,
            "height": self.height,
            "features": [[f.kind.value, f.x, f.y, f.w, f.h] for f in self.features],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> HaarBank:
        if data.get("type") != HAAR_PROVIDER:
            raise DataError(f"Not a Haar feature bank: type '{data.get('type')}'.")
        try:
            width, height = int(data["width"]), int(data["height"])
            geometry = [
                (HaarKind(kind), int(x), int(y), int(w), int(h))
                for kind, x, y, w, h in data["features"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"Malformed Haar feature bank: {exc}") from exc
        # Raises: DataError
        return cls(width, height, tuple(HaarFeature(*item) for item in geometry))
