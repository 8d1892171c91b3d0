# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from ..landscape import DirectionField, ScalarField
from .._errors import DataError, NumericError
from .._logs import LOG

DEFAULT_MIN_ORBIT_LEN = 8
MIN_INDEX_ORBIT_LEN = 4

# 8-neighbourhood, clockwise from east as drawn on screen (y grows downward).
# Angle ties pick the earliest entry.
NEIGHBOUR_OFFSETS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))


class LatticePoint(NamedTuple):
    col: int
    row: int


class StepStatus(str, Enum):
    NEXT = "next"
    OUT_OF_BOUNDS = "out_of_bounds"
    STATIONARY = "stationary"


@dataclass(frozen=True)
class StepOutcome:
    status: StepStatus
    point: Optional[LatticePoint] = None


@dataclass(frozen=True)
class Orbit:
    """
    A lattice streamline: distinct, 8-connected points in flow order. A closed orbit is
    cyclic; its last point steps back onto its first.
    """

    points: tuple[LatticePoint, ...]
    closed: bool
    seed_index: int = 0
    seed_level: float = 0.0

    def __post_init__(self) -> None:
        points = tuple(LatticePoint(int(p[0]), int(p[1])) for p in self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise DataError("An orbit needs at least one point.")
        if any(p.col < 0 or p.row < 0 for p in points):
            raise DataError("Orbit points must have non-negative lattice coordinates.")
        if len(set(points)) != len(points):
            raise DataError("Orbit points must be distinct.")
        if not 0 <= self.seed_index < len(points):
            raise DataError(f"Seed index {self.seed_index} is outside the orbit.")
        pairs = list(zip(points, points[1:]))
        if self.closed and len(points) > 1:
            pairs.append((points[-1], points[0]))
        for a, b in pairs:
            if max(abs(a.col - b.col), abs(a.row - b.row)) != 1:
                raise DataError(f"Orbit points {tuple(a)} and {tuple(b)} are not 8-neighbours.")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def seed(self) -> LatticePoint:
        return self.points[self.seed_index]

    @property
    def cols(self) -> np.ndarray:
        return np.fromiter((p.col for p in self.points), dtype=np.intp, count=len(self.points))

    @property
    def rows(self) -> np.ndarray:
        return np.fromiter((p.row for p in self.points), dtype=np.intp, count=len(self.points))

    def reversed(self) -> Orbit:
        return Orbit(
            points=self.points[::-1],
            closed=self.closed,
            seed_index=len(self.points) - 1 - self.seed_index,
            seed_level=self.seed_level,
        )

    def signed_area2(self) -> int:
        """Twice the signed shoelace area of the cycle in the (col, row) frame."""
        cols, rows = self.cols, self.rows
        return int(np.sum(cols * np.roll(rows, -1) - np.roll(cols, -1) * rows))


class _LatticeFlow:
    """Unit vectors of a direction field as plain lists, for per-pixel stepping."""

    def __init__(self, df: DirectionField):
        self.width = df.width
        self.height = df.height
        self.ux = np.cos(df.angle).tolist()
        self.uy = np.sin(df.angle).tolist()
        self.stationary = df.stationary.tolist()

    def _midpoint_velocity(self, zx: float, zy: float) -> Optional[tuple[float, float]]:
        x0, y0 = math.floor(zx), math.floor(zy)
        vx = vy = 0.0
        for cx, cy in ((x0, y0), (x0 + 1, y0), (x0, y0 + 1), (x0 + 1, y0 + 1)):
            if not (0 <= cx < self.width and 0 <= cy < self.height):
                continue
            dist2 = (cx - zx) ** 2 + (cy - zy) ** 2
            moving = not self.stationary[cy][cx]
            if dist2 < 1e-18:
                # midpoint sits on a grid point
                return (self.ux[cy][cx], self.uy[cy][cx]) if moving else None
            if moving:
                vx += self.ux[cy][cx] / dist2
                vy += self.uy[cy][cx] / dist2
        if math.hypot(vx, vy) < 1e-12:
            return None
        return vx, vy

    def step(self, col: int, row: int) -> StepOutcome:
        if self.stationary[row][col]:
            return StepOutcome(StepStatus.STATIONARY)
        zx = col + 0.5 * self.ux[row][col]
        zy = row + 0.5 * self.uy[row][col]
        velocity = self._midpoint_velocity(zx, zy)
        if velocity is None:
            return StepOutcome(StepStatus.STATIONARY)
        vx, vy = velocity
        best_score = -math.inf
        best = NEIGHBOUR_OFFSETS[0]
        for dx, dy in NEIGHBOUR_OFFSETS:
            ox, oy = col + dx - zx, row + dy - zy
            # |v_z| is common to every candidate, so it drops out of the cosine
            score = (ox * vx + oy * vy) / math.hypot(ox, oy)
            if score > best_score:
                best_score, best = score, (dx, dy)
        nx, ny = col + best[0], row + best[1]
        if not (0 <= nx < self.width and 0 <= ny < self.height):
            return StepOutcome(StepStatus.OUT_OF_BOUNDS)
        return StepOutcome(StepStatus.NEXT, LatticePoint(nx, ny))


@lru_cache(maxsize=8)
def _lattice_flow(df: DirectionField) -> _LatticeFlow:
    return _LatticeFlow(df)


def _check_in_bounds(df: DirectionField, p: LatticePoint) -> None:
    if not (0 <= p.col < df.width and 0 <= p.row < df.height):
        raise DataError(f"Point {tuple(p)} is outside the {df.width}x{df.height} lattice.")


def step(df: DirectionField, p: LatticePoint) -> StepOutcome:
    """
    One application of the forward algorithm on the unit-normalized field: half step to a
    midpoint, inverse-square-distance average of the four surrounding unit vectors, then
    the 8-neighbour of `p` best aligned with that average as seen from the midpoint.

    Raises:
        DataError if p is outside the lattice
    """
    p = LatticePoint(*p)
    _check_in_bounds(df, p)
    return _lattice_flow(df).step(p.col, p.row)


def _follow(
    flow: _LatticeFlow,
    start: LatticePoint,
    visited: set[LatticePoint],
    max_steps: int,
    seed: Optional[LatticePoint],
) -> tuple[list[LatticePoint], bool]:
    """
    Steps from `start` until the lattice edge, a stationary point, a revisit or `max_steps` steps.
    Returns the new points and whether the walk returned exactly onto `seed`.
    """
    points: list[LatticePoint] = []
    current = start
    while len(points) < max_steps:
        outcome = flow.step(current.col, current.row)
        if outcome.status is not StepStatus.NEXT:
            break
        nxt = outcome.point
        assert nxt is not None
        if nxt == seed:
            return points, True
        if nxt in visited:
            break
        points.append(nxt)
        visited.add(nxt)
        current = nxt
    return points, False


def _trace(
    forward: _LatticeFlow,
    backward: _LatticeFlow,
    seed: LatticePoint,
    max_len: int,
    seed_level: float,
) -> Orbit:
    visited = {seed}
    ahead, closed = _follow(forward, seed, visited, max_len - 1, seed)
    if closed:
        return Orbit(points=(seed, *ahead), closed=True, seed_index=0, seed_level=seed_level)
    behind, _ = _follow(backward, seed, visited, max_len - 1 - len(ahead), None)
    return Orbit(
        points=(*reversed(behind), seed, *ahead),
        closed=False,
        seed_index=len(behind),
        seed_level=seed_level,
    )


def default_max_len(df: DirectionField) -> int:
    return 4 * (df.width + df.height)


def _seed_level(levels: Optional[ScalarField], p: LatticePoint) -> float:
    return float(levels.values[p.row, p.col]) if levels is not None else 0.0


def trace_orbit(
    df: DirectionField,
    seed: LatticePoint,
    max_len: Optional[int] = None,
    levels: Optional[ScalarField] = None,
) -> Orbit:
    """
    Traces the complete orbit through `seed`: forward until the edge, a stationary point, a
    revisit or `max_len` points; an exact return to the seed closes the orbit, otherwise the
    backward flow from the seed is traced under the same rules and prepended.

    `levels` is the landscape the field came from, used only to record the seed level.

    Raises:
        DataError if the seed is outside the lattice or stationary, or max_len < 2
    """
    seed = LatticePoint(*seed)
    _check_in_bounds(df, seed)
    max_len = default_max_len(df) if max_len is None else max_len
    if max_len < 2:
        raise DataError(f"max_len must be >= 2, got {max_len}.")
    if df.stationary[seed.row, seed.col]:
        raise DataError(f"Seed {tuple(seed)} is a stationary point of the field.")
    return _trace(
        _lattice_flow(df), _lattice_flow(df.reversed()), seed, max_len, _seed_level(levels, seed)
    )


def extract_all_orbits(
    df: DirectionField,
    min_len: int = DEFAULT_MIN_ORBIT_LEN,
    max_len: Optional[int] = None,
    levels: Optional[ScalarField] = None,
) -> list[Orbit]:
    """
    Seeds an orbit at every moving pixel, in row-major order, that no earlier orbit has
    covered. Orbits shorter than `min_len` are dropped, but their pixels stay covered.

    Raises:
        DataError if min_len < 1
    """
    if min_len < 1:
        raise DataError(f"min_len must be >= 1, got {min_len}.")
    max_len = default_max_len(df) if max_len is None else max_len
    forward = _lattice_flow(df)
    backward = _LatticeFlow(df.reversed())
    covered = df.stationary.copy()
    orbits: list[Orbit] = []
    discarded = 0
    for row in range(df.height):
        for col in range(df.width):
            if covered[row, col]:
                continue
            seed = LatticePoint(col, row)
            orbit = _trace(forward, backward, seed, max_len, _seed_level(levels, seed))
            covered[orbit.rows, orbit.cols] = True
            if len(orbit) >= min_len:
                orbits.append(orbit)
            else:
                discarded += 1
    LOG.debug(
        f"Extracted {len(orbits)} orbits ({sum(o.closed for o in orbits)} closed); "
        f"discarded {discarded} shorter than {min_len} points."
    )
    return orbits


def orient_positive(orbit: Orbit) -> Orbit:
    """
    Returns the closed orbit listed with a positive shoelace sum in the (col, row) frame,
    reversing the point order when needed.

    Raises:
        DataError if the orbit is open or shorter than 4 points
        NumericError if the polygon has zero area
    """
    if not orbit.closed or len(orbit) < MIN_INDEX_ORBIT_LEN:
        raise DataError(
            f"Only closed orbits of at least {MIN_INDEX_ORBIT_LEN} points can be oriented."
        )
    area2 = orbit.signed_area2()
    if area2 == 0:
        raise NumericError("Degenerate polygon: the closed orbit encloses zero area.")
    return orbit if area2 > 0 else orbit.reversed()


@dataclass(frozen=True)
class OrbitStatistics:
    count: int
    closed: int
    mean_length: float
    median_length: float
    total_length: int

    def __str__(self) -> str:
        return (
            f"{self.count} orbits ({self.closed} closed); length mean {self.mean_length:.1f}, "
            f"median {self.median_length:.1f}, total {self.total_length}"
        )


def orbit_statistics(orbits: Sequence[Orbit]) -> OrbitStatistics:
    lengths = [len(orbit) for orbit in orbits]
    return OrbitStatistics(
        count=len(lengths),
        closed=sum(orbit.closed for orbit in orbits),
        mean_length=statistics.fmean(lengths) if lengths else 0.0,
        median_length=float(statistics.median(lengths)) if lengths else 0.0,
        total_length=sum(lengths),
    )
