# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..landscape import EPS_STATIONARY, ScalarField, derive_systems, normalize
from ..streamline import MIN_INDEX_ORBIT_LEN, Orbit, orient_positive
from .._errors import NumericError
from .._logs import LOG
from ._indexes import boundary_flow, continuous_conley, discrete_conley, poincare_index

INDEX_TABLE_HEADER = (
    "orbit_id",
    "length",
    "closed",
    "poincare",
    "continuous_conley",
    "discrete_conley",
)


@dataclass(frozen=True)
class OrbitIndexRow:
    """Indexes of one orbit; the index columns stay empty for open or degenerate orbits."""

    orbit_id: int
    length: int
    closed: bool
    poincare: Optional[float] = None
    continuous_conley: Optional[float] = None
    discrete_conley: Optional[str] = None

    def as_row(self) -> tuple:
        return (
            self.orbit_id,
            self.length,
            str(self.closed).lower(),
            "" if self.poincare is None else self.poincare,
            "" if self.continuous_conley is None else self.continuous_conley,
            self.discrete_conley or "",
        )


def index_table(
    orbits: Sequence[Orbit],
    field: ScalarField,
    eps_stationary: float = EPS_STATIONARY,
    include_open: bool = True,
) -> list[OrbitIndexRow]:
    """
    Evaluates every closed orbit of at least four points against the negative-gradient
    system of `field`. Degenerate polygons and orbits through stationary points keep
    empty index columns; open orbits are listed without indexes or, with
    include_open=False, left out. Rows keep the position of their orbit as its id.
    """
    neg_grad, _ = derive_systems(field)
    neg_grad_df = normalize(neg_grad, eps_stationary)
    rows = []
    for orbit_id, orbit in enumerate(orbits):
        if not orbit.closed and not include_open:
            continue
        row = OrbitIndexRow(orbit_id=orbit_id, length=len(orbit), closed=orbit.closed)
        if orbit.closed and len(orbit) >= MIN_INDEX_ORBIT_LEN:
            try:
                oriented = orient_positive(orbit)
            except NumericError as exc:
                LOG.warning(f"Orbit {orbit_id}: {exc}")
                rows.append(row)
                continue
            flow = boundary_flow(oriented, neg_grad)
            try:
                poincare: Optional[float] = poincare_index(oriented, neg_grad_df)
            except NumericError as exc:
                LOG.debug(f"Orbit {orbit_id}: {exc}")
                poincare = None
            row = OrbitIndexRow(
                orbit_id=orbit_id,
                length=len(orbit),
                closed=True,
                poincare=poincare,
                continuous_conley=continuous_conley(flow),
                discrete_conley=str(discrete_conley(flow)),
            )
        rows.append(row)
    return rows
