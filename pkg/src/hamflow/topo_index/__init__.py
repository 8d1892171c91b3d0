# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._diagnostics import INDEX_TABLE_HEADER, OrbitIndexRow, index_table
from ._indexes import (
    AngleRule,
    BoundaryFlow,
    ConleyKind,
    ConleyType,
    angle_diff,
    boundary_flow,
    continuous_conley,
    discrete_conley,
    poincare_index,
    quadrant_angle_diff,
)

__all__ = [
    "INDEX_TABLE_HEADER",
    "AngleRule",
    "BoundaryFlow",
    "ConleyKind",
    "ConleyType",
    "OrbitIndexRow",
    "angle_diff",
    "boundary_flow",
    "continuous_conley",
    "discrete_conley",
    "index_table",
    "poincare_index",
    "quadrant_angle_diff",
]
