# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._orbit_io import (
    orbit_from_dict,
    orbit_to_dict,
    orbits_from_document,
    orbits_to_document,
    read_orbits_json,
    render_svg_overlay,
    write_orbits_json,
)
from ._tracing import (
    DEFAULT_MIN_ORBIT_LEN,
    MIN_INDEX_ORBIT_LEN,
    NEIGHBOUR_OFFSETS,
    LatticePoint,
    Orbit,
    OrbitStatistics,
    StepOutcome,
    StepStatus,
    default_max_len,
    extract_all_orbits,
    orbit_statistics,
    orient_positive,
    step,
    trace_orbit,
)

__all__ = [
    "DEFAULT_MIN_ORBIT_LEN",
    "MIN_INDEX_ORBIT_LEN",
    "NEIGHBOUR_OFFSETS",
    "LatticePoint",
    "Orbit",
    "OrbitStatistics",
    "StepOutcome",
    "StepStatus",
    "default_max_len",
    "extract_all_orbits",
    "orbit_from_dict",
    "orbit_statistics",
    "orbit_to_dict",
    "orbits_from_document",
    "orbits_to_document",
    "orient_positive",
    "read_orbits_json",
    "render_svg_overlay",
    "step",
    "trace_orbit",
    "write_orbits_json",
]
