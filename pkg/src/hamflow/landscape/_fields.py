# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import ndimage

from .._errors import DataError

EPS_STATIONARY = 1e-9
TWO_PI = 2.0 * math.pi


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=np.float64, copy=True)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class ScalarField:
    """
    A real-valued intensity landscape sampled on a width x height lattice.

    `values` is indexed as values[row, col]; row 0 is the top image row and
    x grows with the column index, y with the row index.
    """

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.ndim != 2:
            raise DataError(f"A scalar field must be two dimensional, got shape {values.shape}.")
        height, width = values.shape
        if width < 2 or height < 2:
            raise DataError(
                f"Zero-dimension or degenerate image ({width}x{height}); both sides must be >= 2."
            )
        if not np.all(np.isfinite(values)):
            raise DataError("Scalar field contains non-finite values.")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def width(self) -> int:
        return int(self.values.shape[1])

    @property
    def height(self) -> int:
        return int(self.values.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.width, self.height)

    def flat(self) -> np.ndarray:
        """Row-major flattened copy of the values."""
        return self.values.reshape(-1).copy()

    def __add__(self, offset: float) -> ScalarField:
        return ScalarField(self.values + offset)

    def __rsub__(self, minuend: float) -> ScalarField:
        return ScalarField(minuend - self.values)


@dataclass(frozen=True, eq=False)
class VectorField:
    """Planar velocity (u along columns / x, v along rows / y) at every lattice point."""

    u: np.ndarray
    v: np.ndarray

    def __post_init__(self) -> None:
        u, v = np.asarray(self.u), np.asarray(self.v)
        if u.shape != v.shape or u.ndim != 2:
            raise DataError(f"Vector field components disagree: {u.shape} vs {v.shape}.")
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
            raise DataError("Vector field contains non-finite values.")
        object.__setattr__(self, "u", _frozen(u))
        object.__setattr__(self, "v", _frozen(v))

    @property
    def width(self) -> int:
        return int(self.u.shape[1])

    @property
    def height(self) -> int:
        return int(self.u.shape[0])

    def __neg__(self) -> VectorField:
        return VectorField(-self.u, -self.v)


@dataclass(frozen=True, eq=False)
class DirectionField:
    """
    Normalized form of a VectorField: the angle in [0, 2*pi) of every vector and its
    pre-normalization magnitude. Points whose magnitude is at most `eps_stationary` are
    stationary and carry angle 0.
    """

    angle: np.ndarray
    magnitude: np.ndarray
    eps_stationary: float = EPS_STATIONARY
    stationary: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        angle, magnitude = np.asarray(self.angle), np.asarray(self.magnitude)
        if angle.shape != magnitude.shape or angle.ndim != 2:
            raise DataError(
                f"Direction field components disagree: {angle.shape} vs {magnitude.shape}."
            )
        object.__setattr__(self, "angle", _frozen(angle))
        object.__setattr__(self, "magnitude", _frozen(magnitude))
        stationary = magnitude <= self.eps_stationary
        stationary.setflags(write=False)
        object.__setattr__(self, "stationary", stationary)

    @property
    def width(self) -> int:
        return int(self.angle.shape[1])

    @property
    def height(self) -> int:
        return int(self.angle.shape[0])

    def reversed(self) -> DirectionField:
        """The direction field of the backward flow: every moving point turned by pi."""
        angle = np.where(self.stationary, 0.0, np.mod(self.angle + math.pi, TWO_PI))
        angle = np.where(angle >= TWO_PI, 0.0, angle)
        return DirectionField(angle, self.magnitude, self.eps_stationary)


def smooth(field: ScalarField, sigma: float) -> ScalarField:
    """
    Gaussian-convolve the field with reflective boundaries.

    Raises:
        DataError if sigma is negative
    """
    if sigma < 0:
        raise DataError(f"Smoothing sigma must be >= 0, got {sigma}.")
    if sigma == 0:
        return ScalarField(field.values)
    return ScalarField(ndimage.gaussian_filter(field.values, sigma=sigma, mode="reflect"))


def gradient(field: ScalarField) -> VectorField:
    """
    (+dI/dx, +dI/dy): central differences inside the lattice, one-sided differences on
    the boundary rows and columns.
    """
    d_row, d_col = np.gradient(field.values, edge_order=1)
    return VectorField(u=d_col, v=d_row)


def derive_systems(field: ScalarField) -> tuple[VectorField, VectorField]:
    """
    Returns (negative gradient system, Hamiltonian system) of the landscape:
    (-dI/dx, -dI/dy) and (-dI/dy, +dI/dx). The two are pointwise orthogonal.
    """
    grad = gradient(field)
    neg_grad = VectorField(u=-grad.u, v=-grad.v)
    hamiltonian = VectorField(u=-grad.v, v=grad.u)
    return neg_grad, hamiltonian


def normalize(vf: VectorField, eps_stationary: float = EPS_STATIONARY) -> DirectionField:
    """
    Raises:
        DataError if eps_stationary is not positive
    """
    if not eps_stationary > 0:
        raise DataError(f"eps_stationary must be > 0, got {eps_stationary}.")
    magnitude = np.hypot(vf.u, vf.v)
    angle = np.mod(np.arctan2(vf.v, vf.u), TWO_PI)
    # tiny negative angles round up to exactly 2*pi
    angle = np.where(angle >= TWO_PI, 0.0, angle)
    angle = np.where(magnitude <= eps_stationary, 0.0, angle)
    return DirectionField(angle=angle, magnitude=magnitude, eps_stationary=eps_stationary)


def average_image(fields: Sequence[ScalarField]) -> ScalarField:
    """
    Pointwise arithmetic mean of equally sized fields.

    Raises:
        DataError on an empty list or mismatched dimensions
    """
    if not fields:
        raise DataError("Cannot average an empty list of images.")
    shape = fields[0].shape
    total = np.zeros_like(fields[0].values)
    for index, item in enumerate(fields):
        if item.shape != shape:
            raise DataError(
                f"Image {index} is {item.width}x{item.height}, expected {shape[0]}x{shape[1]}."
            )
        total += item.values
    return ScalarField(total / len(fields))


def standardize(field: ScalarField) -> ScalarField:
    """Zero-mean / unit-variance copy of the field; a flat field maps to all zeros."""
    centered = field.values - field.values.mean()
    spread = float(centered.std())
    if spread == 0.0:
        return ScalarField(np.zeros_like(centered))
    return ScalarField(centered / spread)
