# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy import ndimage

from .._common import ModelBundle, prepare_image
from ..._errors import DataError
from ..._logs import LOG
from ...landscape import ScalarField


class Window(NamedTuple):
    x: int
    y: int
    w: int
    h: int


@dataclass
class Detection:
    """A window of the source image accepted by the classifier."""

    x: int
    y: int
    w: int
    h: int
    margin: float

    @property
    def box(self) -> Window:
        return Window(self.x, self.y, self.w, self.h)


def scan_windows(
    image_size: tuple[int, int],
    window_size: tuple[int, int],
    scale_factor: float,
    stride: int,
) -> list[Window]:
    """
    Every window position, smallest scale first and row-major within a scale. Window
    sizes grow geometrically by `scale_factor` and the stride grows with them.

    Raises:
        DataError if the image is smaller than the base window, the scale factor is not
        above 1 or the stride is below 1
    """
    if not scale_factor > 1.0:
        raise DataError(f"The window scale factor must be above 1, got {scale_factor}.")
    if stride < 1:
        raise DataError(f"The window stride must be at least 1, got {stride}.")
    image_w, image_h = image_size
    base_w, base_h = window_size
    if image_w < base_w or image_h < base_h:
        raise DataError(
            f"The {image_w}x{image_h} image is smaller than the {base_w}x{base_h} window."
        )
    windows: list[Window] = []
    scale = 1.0
    while True:
        w, h = int(round(base_w * scale)), int(round(base_h * scale))
        if w > image_w or h > image_h:
            break
        step = max(1, int(round(stride * scale)))
        windows.extend(
            Window(x, y, w, h)
            for y in range(0, image_h - h + 1, step)
            for x in range(0, image_w - w + 1, step)
        )
        scale *= scale_factor
    return windows


def resample_window(image: ScalarField, window: Window, size: tuple[int, int]) -> ScalarField:
    """Bilinear resampling of `window` onto a size[0] x size[1] lattice, pixel centres aligned."""
    out_w, out_h = size
    if (window.w, window.h) == (out_w, out_h):
        return ScalarField(image.values[window.y : window.y + out_h, window.x : window.x + out_w])
    rows = window.y + (np.arange(out_h) + 0.5) * (window.h / out_h) - 0.5
    cols = window.x + (np.arange(out_w) + 0.5) * (window.w / out_w) - 0.5
    grid_rows, grid_cols = np.meshgrid(rows, cols, indexing="ij")
    values = ndimage.map_coordinates(image.values, [grid_rows, grid_cols], order=1, mode="nearest")
    return ScalarField(values)


def iou(a: Window, b: Window) -> float:
    overlap_w = min(a.x + a.w, b.x + b.w) - max(a.x, b.x)
    overlap_h = min(a.y + a.h, b.y + b.h) - max(a.y, b.y)
    if overlap_w <= 0 or overlap_h <= 0:
        return 0.0
    inter = overlap_w * overlap_h
    return inter / (a.w * a.h + b.w * b.h - inter)


def suppress_overlaps(detections: Sequence[Detection], max_iou: float) -> list[Detection]:
    """
    Greedy suppression: visit detections by decreasing margin (scan order on ties) and keep
    one unless it overlaps a kept detection with IoU above `max_iou`.
    """
    order = sorted(range(len(detections)), key=lambda index: -detections[index].margin)
    kept: list[Detection] = []
    for index in order:
        candidate = detections[index]
        if all(iou(candidate.box, other.box) <= max_iou for other in kept):
            kept.append(candidate)
    return kept


def detect(
    bundle: ModelBundle,
    image: ScalarField,
    *,
    scale_factor: float,
    stride: int,
    max_iou: float,
    threads: int = 1,
) -> tuple[list[Detection], int]:
    """
    Classifies every scanned window resampled to the model's window size. Returns the
    detections that survive suppression and the number of windows scanned.

    Raises:
        DataError if the image is smaller than the model window
    """
    windows = scan_windows(image.shape, bundle.lattice, scale_factor, stride)

    def margin(window: Window) -> float:
        patch = resample_window(image, window, bundle.lattice)
        patch = prepare_image(patch, bundle.normalize_windows)
        return float(bundle.classifier.margins(bundle.provider.evaluate(patch))[0])

    if threads > 1 and len(windows) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            margins = list(pool.map(margin, windows))
    else:
        margins = [margin(window) for window in windows]
    accepted = [
        Detection(window.x, window.y, window.w, window.h, value)
        for window, value in zip(windows, margins)
        if value >= 0
    ]
    LOG.debug(f"{len(accepted)} of {len(windows)} windows accepted before suppression.")
    return suppress_overlaps(accepted, max_iou), len(windows)
