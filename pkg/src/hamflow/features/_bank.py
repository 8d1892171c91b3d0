# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np

from ..landscape import EPS_STATIONARY, ScalarField, derive_systems, normalize
from ..streamline import (
    DEFAULT_MIN_ORBIT_LEN,
    MIN_INDEX_ORBIT_LEN,
    Orbit,
    extract_all_orbits,
    orient_positive,
)
from .._errors import DataError, NumericError
from .._logs import LOG
from ._templates import (
    DirectionMode,
    FeatureKind,
    FeatureTemplate,
    ImageDynamics,
    check_lattice,
)

HAMILTONIAN_PROVIDER = "hamiltonian"


@dataclass(frozen=True, eq=False)
class FeatureBank:
    """
    Streamline feature templates extracted from one canonical image. Column j of every
    feature matrix built from the bank holds the value of templates[j].
    """

    canonical: ScalarField
    templates: tuple[FeatureTemplate, ...]
    direction_mode: DirectionMode = "wrapped"
    smoothing_sigma: float = 0.0
    eps_stationary: float = EPS_STATIONARY

    def __post_init__(self) -> None:
        object.__setattr__(self, "templates", tuple(self.templates))
        for template in self.templates:
            if template.lattice != self.canonical.shape:
                raise DataError(
                    f"Template {template.template_id} was built on a {template.lattice} "
                    f"lattice, the canonical image is {self.canonical.shape}."
                )

    @property
    def lattice(self) -> tuple[int, int]:
        return self.canonical.shape

    @property
    def column_ids(self) -> tuple[str, ...]:
        return tuple(template.template_id for template in self.templates)

    @property
    def column_kinds(self) -> tuple[str, ...]:
        return tuple(template.kind.value for template in self.templates)

    @property
    def column_costs(self) -> tuple[int, ...]:
        """Orbit pixels read by each column."""
        return tuple(len(template.orbit) for template in self.templates)

    @property
    def orbits(self) -> list[Orbit]:
        """The distinct template orbits, in orbit id order."""
        seen: dict[int, Orbit] = {}
        for template in self.templates:
            seen.setdefault(template.orbit_id, template.orbit)
        return [seen[key] for key in sorted(seen)]

    def dynamics(self, img: ScalarField) -> ImageDynamics:
        return ImageDynamics.of(img, self.smoothing_sigma, self.eps_stationary)

    def evaluate(self, img: ScalarField, index: Optional[int] = None) -> np.ndarray:
        """
        One feature-matrix row: every template evaluated on `img`.

        Raises:
            DataError if `img` does not match the canonical lattice
        """
        check_lattice(self.lattice, img, index)
        dynamics = self.dynamics(img)
        return np.array(
            [template.evaluate(dynamics, self.direction_mode) for template in self.templates],
            dtype=np.float64,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": HAMILTONIAN_PROVIDER,
            "width": self.canonical.width,
            "height": self.canonical.height,
            "direction_mode": self.direction_mode,
            "smoothing_sigma": self.smoothing_sigma,
            "eps_stationary": self.eps_stationary,
            "canonical": self.canonical.values.tolist(),
            "templates": [template.to_dict() for template in self.templates],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FeatureBank:
        if data.get("type", HAMILTONIAN_PROVIDER) != HAMILTONIAN_PROVIDER:
            raise DataError(f"Not a streamline feature bank: type '{data.get('type')}'.")
        try:
            canonical_values = np.array(data["canonical"], dtype=np.float64)
            template_documents = list(data["templates"])
            settings = {
                "direction_mode": data.get("direction_mode", "wrapped"),
                "smoothing_sigma": float(data.get("smoothing_sigma", 0.0)),
                "eps_stationary": float(data.get("eps_stationary", EPS_STATIONARY)),
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"Malformed feature bank: {exc}") from exc
        # Raises: DataError
        return cls(
            canonical=ScalarField(canonical_values),
            templates=tuple(FeatureTemplate.from_dict(item) for item in template_documents),
            **settings,
        )


def _templates_for(
    orbit: Orbit, orbit_id: int, landscape: ImageDynamics
) -> list[FeatureTemplate]:
    eligible = orbit.closed and len(orbit) >= MIN_INDEX_ORBIT_LEN
    if eligible:
        try:
            orbit = orient_positive(orbit)
        except NumericError as exc:
            LOG.warning(f"Orbit {orbit_id} gets no index features: {exc}")
            eligible = False
    rows, cols = orbit.rows, orbit.cols
    lattice = landscape.field.shape
    templates = [
        FeatureTemplate(
            kind=FeatureKind.DENSITY_MATCH,
            orbit=orbit,
            orbit_id=orbit_id,
            lattice=lattice,
            ref_density=landscape.field.values[rows, cols],
        ),
        FeatureTemplate(
            kind=FeatureKind.DIRECTION_MATCH,
            orbit=orbit,
            orbit_id=orbit_id,
            lattice=lattice,
            ref_direction=landscape.neg_grad_df.angle[rows, cols],
        ),
    ]
    if eligible:
        templates.extend(
            FeatureTemplate(kind=kind, orbit=orbit, orbit_id=orbit_id, lattice=lattice)
            for kind in (FeatureKind.POINCARE_INDEX, FeatureKind.CONLEY_INDEX)
        )
    return templates


def build_feature_bank(
    canonical: ScalarField,
    *,
    min_orbit_len: int = DEFAULT_MIN_ORBIT_LEN,
    max_orbit_len: Optional[int] = None,
    eps_stationary: float = EPS_STATIONARY,
    smoothing_sigma: float = 0.0,
    direction_mode: DirectionMode = "wrapped",
) -> FeatureBank:
    """
    Extracts every orbit of the canonical image's Hamiltonian flow and turns each into a
    density and a direction template; closed orbits of at least four points with nonzero
    area also get a Poincare index and a Conley index template.

    Raises:
        NumericError if the canonical image has no orbits
    """
    landscape = ImageDynamics.of(canonical, smoothing_sigma, eps_stationary)
    field = landscape.field
    _, hamiltonian = derive_systems(field)
    orbits = extract_all_orbits(
        normalize(hamiltonian, eps_stationary),
        min_len=min_orbit_len,
        max_len=max_orbit_len,
        levels=field,
    )
    if not orbits:
        raise NumericError(
            "The canonical image has no orbits of at least "
            f"{min_orbit_len} points; is the image constant?"
        )
    templates: list[FeatureTemplate] = []
    for orbit_id, orbit in enumerate(orbits):
        templates.extend(_templates_for(orbit, orbit_id, landscape))
    bank = FeatureBank(
        canonical=canonical,
        templates=tuple(templates),
        direction_mode=direction_mode,
        smoothing_sigma=smoothing_sigma,
        eps_stationary=eps_stationary,
    )
    LOG.info(
        f"Feature bank: {len(orbits)} orbits, {sum(o.closed for o in orbits)} closed, "
        f"{len(templates)} templates."
    )
    return bank


def count_templates(kinds: Sequence[str]) -> dict[str, int]:
    counts = {kind.value: 0 for kind in FeatureKind}
    for kind in kinds:
        counts[kind] = counts.get(kind, 0) + 1
    return counts
