# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

"""Analytic landscapes and hand-made orbits shared by the test packages."""

import math
from pathlib import Path
from typing import Callable

import numpy as np

from hamflow.landscape import ScalarField, save_pgm
from hamflow.streamline import Orbit


def centered_grid(size: int) -> tuple[np.ndarray, np.ndarray]:
    """Pixel offsets (x, y) from the centre of a size x size lattice."""
    offsets = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    return np.meshgrid(offsets, offsets, indexing="xy")


def from_function(size: int, fn: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> ScalarField:
    x, y = centered_grid(size)
    return ScalarField(fn(x, y))


def bowl(size: int = 41) -> ScalarField:
    """x^2 + y^2: a single minimum (sink of the gradient flow) at the centre."""
    return from_function(size, lambda x, y: x**2 + y**2)


def inverted_bowl(size: int = 41) -> ScalarField:
    return from_function(size, lambda x, y: -(x**2) - y**2)


def saddle(size: int = 41) -> ScalarField:
    return from_function(size, lambda x, y: x**2 - y**2)


def ramp(width: int, height: int) -> ScalarField:
    """I = x, the column index."""
    return ScalarField(np.tile(np.arange(width, dtype=np.float64), (height, 1)))


def offset_bowl(size: int = 20, base: int = 0) -> ScalarField:
    """
    Integer-valued bowl centred between pixels on an even lattice. Its gradient never
    vanishes, so the field has no stationary points at all.
    """
    index = np.arange(size)
    cols, rows = np.meshgrid(index, index, indexing="xy")
    values = base + (2 * cols - (size - 1)) ** 2 + (2 * rows - (size - 1)) ** 2
    return ScalarField(values.astype(np.float64))


def gaussian_bump(size: int = 41, spread: float = 0.5, amplitude: float = 255.0) -> ScalarField:
    """amplitude * exp(-r^2 / (2 spread^2)) sampled over [-1, 1] x [-1, 1]."""
    x, y = np.meshgrid(np.linspace(-1, 1, size), np.linspace(-1, 1, size), indexing="xy")
    return ScalarField(amplitude * np.exp(-(x**2 + y**2) / (2 * spread**2)))


def domain_bowl(size: int) -> ScalarField:
    """x^2 + y^2 sampled over [-1, 1] x [-1, 1]: the same landscape at any resolution."""
    x, y = np.meshgrid(np.linspace(-1, 1, size), np.linspace(-1, 1, size), indexing="xy")
    return ScalarField(x**2 + y**2)


def sink_and_saddle(size: int = 41, scale: float = 5.0) -> ScalarField:
    """x^3 - 3x + y^2 in units of `scale` pixels: a minimum at x=+1 and a saddle at x=-1."""

    def fn(x, y):
        x, y = x / scale, y / scale
        return x**3 - 3 * x + y**2

    return from_function(size, fn)


def square_orbit(cx: int, cy: int, half: int) -> Orbit:
    """The closed boundary of the square of half-width `half` centred on (cx, cy)."""
    points = []
    points += [(cx + half, cy + t) for t in range(-half, half)]
    points += [(cx + t, cy + half) for t in range(half, -half, -1)]
    points += [(cx - half, cy + t) for t in range(half, -half, -1)]
    points += [(cx + t, cy - half) for t in range(-half, half)]
    return Orbit(points=tuple(points), closed=True)


def circle_orbit(cx: int, cy: int, radius: int, samples: int = 4000) -> Orbit:
    """A rasterized circle walked with increasing angle."""
    points: list[tuple[int, int]] = []
    for k in range(samples):
        theta = 2 * math.pi * k / samples
        p = (cx + round(radius * math.cos(theta)), cy + round(radius * math.sin(theta)))
        if not points or points[-1] != p:
            points.append(p)
    while points[-1] == points[0]:
        points.pop()
    return Orbit(points=tuple(points), closed=True)


def noisy(field: ScalarField, relative_amplitude: float, seed: int) -> ScalarField:
    """Adds uniform noise scaled to the field's largest gradient magnitude."""
    d_row, d_col = np.gradient(field.values)
    amplitude = relative_amplitude * float(np.max(np.hypot(d_col, d_row)))
    rng = np.random.default_rng(seed)
    return ScalarField(field.values + rng.uniform(-amplitude, amplitude, field.values.shape))


def write_pgm(path: Path, values) -> Path:
    save_pgm(ScalarField(np.asarray(values, dtype=np.float64)), path)
    return path
