# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Literal, Optional

import numpy as np

from ..landscape import (
    EPS_STATIONARY,
    DirectionField,
    ScalarField,
    VectorField,
    derive_systems,
    normalize,
    smooth,
)
from ..streamline import MIN_INDEX_ORBIT_LEN, Orbit, orbit_from_dict, orbit_to_dict
from ..topo_index import boundary_flow, continuous_conley, poincare_index
from .._errors import DataError

DirectionMode = Literal["wrapped", "raw"]


class FeatureKind(str, Enum):
    DENSITY_MATCH = "density_match"
    DIRECTION_MATCH = "direction_match"
    POINCARE_INDEX = "poincare_index"
    CONLEY_INDEX = "conley_index"

    @property
    def needs_closed_orbit(self) -> bool:
        return self in (FeatureKind.POINCARE_INDEX, FeatureKind.CONLEY_INDEX)


@dataclass(frozen=True, eq=False)
class ImageDynamics:
    """The per-image quantities every template reads; computed once per evaluated image."""

    field: ScalarField
    neg_grad: VectorField
    neg_grad_df: DirectionField

    @classmethod
    def of(
        cls,
        img: ScalarField,
        smoothing_sigma: float = 0.0,
        eps_stationary: float = EPS_STATIONARY,
    ) -> ImageDynamics:
        field = smooth(img, smoothing_sigma) if smoothing_sigma > 0 else img
        neg_grad, _ = derive_systems(field)
        return cls(field=field, neg_grad=neg_grad, neg_grad_df=normalize(neg_grad, eps_stationary))


@dataclass(frozen=True, eq=False)
class FeatureTemplate:
    """
    One canonical orbit paired with a feature kind. Density templates carry the canonical
    intensities along the orbit, direction templates the canonical negative-gradient angles.
    """

    kind: FeatureKind
    orbit: Orbit
    orbit_id: int
    lattice: tuple[int, int]
    ref_density: Optional[np.ndarray] = None
    ref_direction: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        width, height = (int(side) for side in self.lattice)
        object.__setattr__(self, "lattice", (width, height))
        cols, rows = self.orbit.cols, self.orbit.rows
        if int(cols.min()) < 0 or int(rows.min()) < 0:
            raise DataError("Template orbit has negative lattice coordinates.")
        if int(cols.max()) >= width or int(rows.max()) >= height:
            raise DataError(f"Template orbit leaves its {width}x{height} lattice.")
        if self.kind.needs_closed_orbit and (
            not self.orbit.closed or len(self.orbit) < MIN_INDEX_ORBIT_LEN
        ):
            raise DataError(
                f"{self.kind.value} templates need a closed orbit of at least "
                f"{MIN_INDEX_ORBIT_LEN} points."
            )
        for name, needed in (
            ("ref_density", self.kind is FeatureKind.DENSITY_MATCH),
            ("ref_direction", self.kind is FeatureKind.DIRECTION_MATCH),
        ):
            ref = getattr(self, name)
            if needed and ref is None:
                raise DataError(f"{self.kind.value} templates need {name}.")
            if ref is not None:
                ref = np.array(ref, dtype=np.float64)
                if ref.shape != (len(self.orbit),):
                    raise DataError(
                        f"{name} has {ref.size} values for an orbit of {len(self.orbit)} points."
                    )
                ref.setflags(write=False)
                object.__setattr__(self, name, ref)

    @property
    def template_id(self) -> str:
        return f"{self.kind.value}:{self.orbit_id}"

    def evaluate(self, dynamics: ImageDynamics, direction_mode: DirectionMode = "wrapped") -> float:
        if self.kind is FeatureKind.DENSITY_MATCH:
            return _density_distance(self, dynamics)
        if self.kind is FeatureKind.DIRECTION_MATCH:
            return _direction_distance(self, dynamics, direction_mode)
        if self.kind is FeatureKind.POINCARE_INDEX:
            return poincare_index(self.orbit, dynamics.neg_grad_df, stationary="skip")
        return continuous_conley(boundary_flow(self.orbit, dynamics.neg_grad))

    def to_dict(self) -> dict[str, Any]:
        document: dict[str, Any] = {
            "id": self.template_id,
            "kind": self.kind.value,
            "orbit_id": self.orbit_id,
            "lattice": list(self.lattice),
            "orbit": orbit_to_dict(self.orbit),
        }
        if self.ref_density is not None:
            document["ref_density"] = self.ref_density.tolist()
        if self.ref_direction is not None:
            document["ref_direction"] = self.ref_direction.tolist()
        return document

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FeatureTemplate:
        try:
            kind = FeatureKind(data["kind"])
            orbit_id = int(data["orbit_id"])
            width, height = data["lattice"]
            orbit = data["orbit"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"Malformed feature template: {exc}") from exc
        return cls(
            kind=kind,
            orbit=orbit_from_dict(orbit),
            orbit_id=orbit_id,
            lattice=(width, height),
            ref_density=data.get("ref_density"),
            ref_direction=data.get("ref_direction"),
        )


def _density_distance(template: FeatureTemplate, dynamics: ImageDynamics) -> float:
    assert template.ref_density is not None
    sampled = dynamics.field.values[template.orbit.rows, template.orbit.cols]
    return float(np.linalg.norm(template.ref_density - sampled))


def _direction_distance(
    template: FeatureTemplate, dynamics: ImageDynamics, mode: DirectionMode
) -> float:
    assert template.ref_direction is not None
    rows, cols = template.orbit.rows, template.orbit.cols
    delta = dynamics.neg_grad_df.angle[rows, cols] - template.ref_direction
    if mode == "wrapped":
        delta = np.abs(delta)
        delta = np.minimum(delta, 2.0 * math.pi - delta)
    elif mode != "raw":
        raise DataError(f"Unknown direction mode '{mode}'; expected 'wrapped' or 'raw'.")
    delta = np.where(dynamics.neg_grad_df.stationary[rows, cols], math.pi, delta)
    return float(np.linalg.norm(delta))


def check_lattice(lattice: tuple[int, int], img: ScalarField, index: Optional[int] = None) -> None:
    """
    Raises:
        DataError if `img` does not match the canonical lattice
    """
    if img.shape != tuple(lattice):
        where = "Image" if index is None else f"Image {index}"
        raise DataError(
            f"{where} is {img.width}x{img.height}, the canonical image is "
            f"{lattice[0]}x{lattice[1]}."
        )


def _evaluate_one(
    kind: FeatureKind, template: FeatureTemplate, img: ScalarField, **kwargs: Any
) -> float:
    if template.kind is not kind:
        raise DataError(f"Expected a {kind.value} template, got {template.template_id}.")
    check_lattice(template.lattice, img)
    return template.evaluate(ImageDynamics.of(img), **kwargs)


def eval_density(template: FeatureTemplate, img: ScalarField) -> float:
    """
    L2 distance between the canonical intensities and `img` along the template orbit.

    Raises:
        DataError on a dimension mismatch or a template of another kind
    """
    return _evaluate_one(FeatureKind.DENSITY_MATCH, template, img)


def eval_direction(
    template: FeatureTemplate, img: ScalarField, mode: DirectionMode = "wrapped"
) -> float:
    """
    L2 norm of the per-point angle differences between the canonical negative-gradient
    directions and those of `img` along the template orbit. "wrapped" measures circular
    distance, "raw" plain differences of the angle values. Stationary pixels of `img`
    contribute pi.

    Raises:
        DataError on a dimension mismatch or a template of another kind
    """
    return _evaluate_one(FeatureKind.DIRECTION_MATCH, template, img, direction_mode=mode)


def eval_poincare(template: FeatureTemplate, img: ScalarField) -> float:
    """Poincare index of the canonical orbit in the negative-gradient field of `img`."""
    return _evaluate_one(FeatureKind.POINCARE_INDEX, template, img)


def eval_conley(template: FeatureTemplate, img: ScalarField) -> float:
    """Continuous pseudo Conley index of the canonical orbit under the flow of `img`."""
    return _evaluate_one(FeatureKind.CONLEY_INDEX, template, img)
