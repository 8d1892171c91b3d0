# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import math

import numpy as np
import pytest

from hamflow import DataError
from hamflow.features import (
    FeatureKind,
    FeatureTemplate,
    check_lattice,
    eval_conley,
    eval_density,
    eval_direction,
    eval_poincare,
)
from hamflow.landscape import ScalarField
from hamflow.streamline import Orbit, orient_positive
from synthetic_fields import offset_bowl, square_orbit

CANONICAL = offset_bowl(20, base=30)
RING = orient_positive(square_orbit(10, 10, 6))


def template(kind: FeatureKind, orbit: Orbit = RING, **refs) -> FeatureTemplate:
    return FeatureTemplate(kind=kind, orbit=orbit, orbit_id=3, lattice=CANONICAL.shape, **refs)


def density_template(orbit: Orbit = RING) -> FeatureTemplate:
    return template(
        FeatureKind.DENSITY_MATCH, orbit, ref_density=CANONICAL.values[orbit.rows, orbit.cols]
    )


class TestFeatureTemplate:
    def test_identity(self):
        assert template(FeatureKind.CONLEY_INDEX).template_id == "conley_index:3"

    def test_document_roundtrip_keeps_references(self):
        original = density_template()

        copy = FeatureTemplate.from_dict(original.to_dict())

        assert copy.template_id == original.template_id
        assert copy.orbit == original.orbit
        assert np.array_equal(copy.ref_density, original.ref_density)

    @pytest.mark.parametrize(
        "kind,orbit,refs",
        [
            pytest.param(
                FeatureKind.POINCARE_INDEX,
                Orbit(points=((0, 0), (1, 0), (2, 0), (3, 0)), closed=False),
                {},
                id="Index on an open orbit",
            ),
            pytest.param(FeatureKind.DENSITY_MATCH, RING, {}, id="Density without reference"),
            pytest.param(
                FeatureKind.DIRECTION_MATCH,
                RING,
                {"ref_direction": np.zeros(5)},
                id="Reference of the wrong length",
            ),
            pytest.param(
                FeatureKind.CONLEY_INDEX, square_orbit(18, 18, 3), {}, id="Orbit off the lattice"
            ),
        ],
    )
    def test_rejects(self, kind: FeatureKind, orbit: Orbit, refs: dict):
        with pytest.raises(DataError):
            FeatureTemplate(kind=kind, orbit=orbit, orbit_id=0, lattice=(20, 20), **refs)

    def test_malformed_document(self):
        with pytest.raises(DataError, match="Malformed"):
            FeatureTemplate.from_dict({"kind": "density_match"})


class TestEvalDensity:
    def test_zero_on_the_canonical_image(self):
        assert eval_density(density_template(), CANONICAL) == 0.0

    def test_intensity_offset(self):
        value = eval_density(density_template(), CANONICAL + 7)
        assert value == pytest.approx(7 * math.sqrt(len(RING)), abs=1e-9)

    def test_one_changed_pixel(self):
        values = CANONICAL.values.copy()
        point = RING.points[5]
        values[point.row, point.col] -= 4.5

        assert eval_density(density_template(), ScalarField(values)) == pytest.approx(4.5)

    def test_dimension_mismatch(self):
        with pytest.raises(DataError, match="Image is 21x20, the canonical image is 20x20"):
            eval_density(density_template(), ScalarField(np.zeros((20, 21))))

    def test_wrong_kind(self):
        with pytest.raises(DataError, match="Expected a density_match template"):
            eval_density(template(FeatureKind.CONLEY_INDEX), CANONICAL)


class TestEvalDirection:
    def direction_template(self) -> FeatureTemplate:
        return template(FeatureKind.DIRECTION_MATCH, ref_direction=np.zeros(len(RING)))

    def tilted_ramp(self) -> ScalarField:
        # the negative gradient (10, -1) points just below angle 2*pi
        cols, rows = np.meshgrid(np.arange(20), np.arange(20), indexing="xy")
        return ScalarField((-10 * cols + rows).astype(np.float64))

    def test_wrapped_distance(self):
        per_point = math.atan2(1, 10)
        value = eval_direction(self.direction_template(), self.tilted_ramp())
        assert value == pytest.approx(per_point * math.sqrt(len(RING)), rel=1e-9)

    def test_raw_distance(self):
        per_point = 2 * math.pi - math.atan2(1, 10)
        value = eval_direction(self.direction_template(), self.tilted_ramp(), mode="raw")
        assert value == pytest.approx(per_point * math.sqrt(len(RING)), rel=1e-9)

    def test_stationary_pixels_count_as_opposite(self):
        value = eval_direction(self.direction_template(), ScalarField(np.full((20, 20), 5.0)))
        assert value == pytest.approx(math.pi * math.sqrt(len(RING)))

    def test_inverted_image_is_opposite(self):
        orbit = RING
        ref = template(
            FeatureKind.DIRECTION_MATCH,
            ref_direction=np.mod(
                np.arctan2(
                    -np.gradient(CANONICAL.values, axis=0), -np.gradient(CANONICAL.values, axis=1)
                ),
                2 * math.pi,
            )[orbit.rows, orbit.cols],
        )

        assert eval_direction(ref, CANONICAL) == pytest.approx(0.0, abs=1e-12)
        assert eval_direction(ref, 255 - CANONICAL) == pytest.approx(
            math.pi * math.sqrt(len(orbit)), abs=1e-6
        )

    def test_unknown_mode(self):
        with pytest.raises(DataError, match="Unknown direction mode"):
            eval_direction(self.direction_template(), CANONICAL, mode="sideways")


class TestEvalIndexes:
    def test_poincare_around_the_minimum(self):
        poincare = template(FeatureKind.POINCARE_INDEX)

        assert eval_poincare(poincare, CANONICAL) == pytest.approx(1.0, abs=0.15)
        assert eval_poincare(poincare, 255 - CANONICAL) == pytest.approx(1.0, abs=0.15)

    def test_poincare_of_a_constant_image(self):
        poincare = template(FeatureKind.POINCARE_INDEX)
        assert eval_poincare(poincare, ScalarField(np.full((20, 20), 3.0))) == 0.0

    def test_conley_around_minimum_and_maximum(self):
        conley = template(FeatureKind.CONLEY_INDEX)

        assert eval_conley(conley, CANONICAL) == pytest.approx(0.0, abs=0.1)
        assert eval_conley(conley, 255 - CANONICAL) == pytest.approx(1.0, abs=0.1)

    def test_conley_of_a_constant_image(self):
        conley = template(FeatureKind.CONLEY_INDEX)
        assert eval_conley(conley, ScalarField(np.full((20, 20), 3.0))) == 0.0


def test_check_lattice_names_the_image():
    with pytest.raises(DataError, match="Image 4 is 3x2"):
        check_lattice((20, 20), ScalarField(np.zeros((2, 3))), 4)
