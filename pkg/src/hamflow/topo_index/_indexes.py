# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np

from ..landscape import DirectionField, VectorField
from ..streamline import MIN_INDEX_ORBIT_LEN, Orbit
from .._errors import DataError, NumericError

AngleRule = Literal["minimal", "quadrant"]
StationaryPolicy = Literal["error", "skip"]

_HALF_PI = 0.5 * math.pi
_THREE_HALF_PI = 1.5 * math.pi
_TWO_PI = 2.0 * math.pi


class ConleyKind(str, Enum):
    DISK = "D2"
    TWO_POINT_SET = "S0"
    WEDGE_OF_CIRCLES = "S1"
    SPHERE = "S2"


@dataclass(frozen=True)
class ConleyType:
    """One of D2, S0, S2 or a wedge of `circles` >= 1 copies of S1."""

    kind: ConleyKind
    circles: int = 0

    def __post_init__(self) -> None:
        if self.kind is ConleyKind.WEDGE_OF_CIRCLES and self.circles < 1:
            raise DataError("A wedge of circles needs at least one circle.")
        if self.kind is not ConleyKind.WEDGE_OF_CIRCLES and self.circles != 0:
            raise DataError(f"{self.kind.value} carries no circle count.")

    def __str__(self) -> str:
        if self.kind is ConleyKind.WEDGE_OF_CIRCLES:
            return " v ".join(["S1"] * self.circles)
        return self.kind.value


@dataclass(frozen=True)
class BoundaryFlow:
    """Cyclic exit flags along a closed orbit; True marks a pixel where the flow leaves."""

    exit_flags: tuple[bool, ...]
    entering_count: int
    exiting_count: int

    def __post_init__(self) -> None:
        exiting = sum(self.exit_flags)
        if exiting != self.exiting_count or len(self.exit_flags) - exiting != self.entering_count:
            raise DataError("Boundary flow counts disagree with its exit flags.")

    @classmethod
    def from_flags(cls, flags) -> BoundaryFlow:
        flags = tuple(bool(flag) for flag in flags)
        exiting = sum(flags)
        return cls(exit_flags=flags, entering_count=len(flags) - exiting, exiting_count=exiting)

    def exit_runs(self) -> int:
        """Number of maximal cyclic runs of exiting pixels."""
        flags = self.exit_flags
        if not flags:
            return 0
        if all(flags):
            return 1
        return sum(1 for k in range(len(flags)) if flags[k] and not flags[k - 1])


def angle_diff(a2: float, a1: float) -> float:
    """a2 - a1 wrapped into (-pi, pi]."""
    diff = a2 - a1
    if diff > math.pi:
        diff -= _TWO_PI
    elif diff <= -math.pi:
        diff += _TWO_PI
    return diff


def quadrant_angle_diff(a2: float, a1: float) -> float:
    """
    The three-branch difference that only corrects wrap-around between the first and the
    fourth quadrant; agrees with `angle_diff` whenever the true step is below pi/2.
    """
    if 0.0 <= a2 <= _HALF_PI and _THREE_HALF_PI < a1 < _TWO_PI:
        return a2 + _TWO_PI - a1
    if _THREE_HALF_PI <= a2 < _TWO_PI and 0.0 <= a1 < _HALF_PI:
        return a2 - (a1 + _TWO_PI)
    return a2 - a1


def _check_index_orbit(orbit: Orbit) -> None:
    if not orbit.closed or len(orbit) < MIN_INDEX_ORBIT_LEN:
        raise DataError(
            f"Indexes need a closed orbit of at least {MIN_INDEX_ORBIT_LEN} points "
            f"(got {'closed' if orbit.closed else 'open'}, {len(orbit)} points)."
        )


def _check_dimensions(orbit: Orbit, width: int, height: int) -> None:
    cols, rows = orbit.cols, orbit.rows
    if cols.min() < 0 or rows.min() < 0 or cols.max() >= width or rows.max() >= height:
        raise DataError(f"Orbit leaves the {width}x{height} lattice of the field.")


def poincare_index(
    orbit: Orbit,
    df: DirectionField,
    *,
    rule: AngleRule = "minimal",
    stationary: StationaryPolicy = "error",
) -> float:
    """
    Winding number, in turns, of the direction field along the closed orbit, including the
    closing step from the last point back to the first. The result is the true index for a
    positively oriented orbit and its negation for a reversed one.

    With stationary="skip", every step into or out of a stationary pixel contributes zero.

    Raises:
        DataError if the orbit is open, too short or outside the field
        NumericError if an orbit point is stationary and stationary="error"
    """
    _check_index_orbit(orbit)
    _check_dimensions(orbit, df.width, df.height)
    cols, rows = orbit.cols, orbit.rows
    angles = df.angle[rows, cols]
    still = df.stationary[rows, cols]
    if stationary == "error" and still.any():
        raise NumericError(
            "The orbit passes through a stationary point; its Poincare index is undefined."
        )
    following = np.roll(angles, -1)
    if rule == "quadrant":
        steps = np.array([quadrant_angle_diff(a2, a1) for a2, a1 in zip(following, angles)])
    else:
        steps = following - angles
        steps = np.where(steps > math.pi, steps - _TWO_PI, steps)
        steps = np.where(steps <= -math.pi, steps + _TWO_PI, steps)
    steps = np.where(still | np.roll(still, -1), 0.0, steps)
    return math.fsum(steps.tolist()) / _TWO_PI


def boundary_flow(orbit: Orbit, vf: VectorField) -> BoundaryFlow:
    """
    Marks each orbit pixel as exiting when the field has a positive component along the
    outward normal there. Normals are the central-difference tangents turned by 90 degrees,
    with one global sign chosen so they point away from the centroid on average. A pixel
    whose tangent vanishes inherits its predecessor's flag; a zero component counts as
    entering.

    Raises:
        DataError if the orbit is open, too short or outside the field
    """
    _check_index_orbit(orbit)
    _check_dimensions(orbit, vf.width, vf.height)
    cols, rows = orbit.cols, orbit.rows
    xs, ys = cols.astype(np.float64), rows.astype(np.float64)
    tx = 0.5 * (np.roll(xs, -1) - np.roll(xs, 1))
    ty = 0.5 * (np.roll(ys, -1) - np.roll(ys, 1))
    nx, ny = ty, -tx
    if np.sum(nx * (xs - xs.mean()) + ny * (ys - ys.mean())) < 0:
        nx, ny = -nx, -ny
    outflow = vf.u[rows, cols] * nx + vf.v[rows, cols] * ny
    exiting = (outflow > 0).tolist()
    degenerate = ((tx == 0) & (ty == 0)).tolist()
    count = len(exiting)
    if not all(degenerate):
        start = degenerate.index(False)
        for offset in range(1, count):
            k = (start + offset) % count
            if degenerate[k]:
                exiting[k] = exiting[k - 1]
    else:
        exiting = [False] * count
    return BoundaryFlow.from_flags(exiting)


def continuous_conley(flow: BoundaryFlow) -> float:
    """Fraction of boundary pixels that are exiting."""
    return flow.exiting_count / len(flow.exit_flags)


def discrete_conley(flow: BoundaryFlow) -> ConleyType:
    runs = flow.exit_runs()
    if runs == 0:
        return ConleyType(ConleyKind.TWO_POINT_SET)
    if runs == 1:
        if flow.entering_count == 0:
            return ConleyType(ConleyKind.SPHERE)
        return ConleyType(ConleyKind.DISK)
    return ConleyType(ConleyKind.WEDGE_OF_CIRCLES, circles=runs - 1)
