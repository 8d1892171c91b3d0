# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

import math

import numpy as np
import pytest

from hamflow import DataError, NumericError
from hamflow.landscape import ScalarField, VectorField, derive_systems, normalize
from hamflow.streamline import Orbit, orient_positive
from hamflow.topo_index import (
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
from synthetic_fields import (
    bowl,
    circle_orbit,
    inverted_bowl,
    noisy,
    ramp,
    saddle,
    sink_and_saddle,
    square_orbit,
)

SQUARE = orient_positive(square_orbit(20, 20, 8))
CIRCLE = orient_positive(circle_orbit(20, 20, 8))


def negative_gradient(field: ScalarField) -> VectorField:
    return derive_systems(field)[0]


def negative_gradient_field(field: ScalarField):
    return normalize(negative_gradient(field))


class TestAngleDiff:
    @pytest.mark.parametrize(
        "a2,a1,expected",
        [
            pytest.param(0.1, 2 * math.pi - 0.1, 0.2, id="Across zero forward"),
            pytest.param(2 * math.pi - 0.1, 0.1, -0.2, id="Across zero backward"),
            pytest.param(1.0, 0.5, 0.5, id="Plain"),
            pytest.param(math.pi, 0.0, math.pi, id="Half turn"),
            pytest.param(0.0, math.pi, math.pi, id="Half turn backward"),
        ],
    )
    def test_wraps_into_half_open_interval(self, a2: float, a1: float, expected: float):
        assert angle_diff(a2, a1) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize(
        "a2,a1",
        [
            pytest.param(0.1, 2 * math.pi - 0.3, id="First after fourth quadrant"),
            pytest.param(2 * math.pi - 0.2, 0.4, id="Fourth after first quadrant"),
            pytest.param(2.0, 1.2, id="Same half plane"),
            pytest.param(3.5, 4.4, id="Third and fourth quadrant"),
        ],
    )
    def test_quadrant_rule_agrees_on_small_steps(self, a2: float, a1: float):
        assert quadrant_angle_diff(a2, a1) == pytest.approx(angle_diff(a2, a1), abs=1e-12)


class TestPoincareIndex:
    @pytest.mark.parametrize(
        "field,expected",
        [
            pytest.param(bowl(), 1, id="Sink"),
            pytest.param(inverted_bowl(), 1, id="Source"),
            pytest.param(saddle(), -1, id="Saddle"),
            pytest.param(ramp(41, 41), 0, id="No critical point"),
        ],
    )
    @pytest.mark.parametrize(
        "orbit", [pytest.param(SQUARE, id="Square"), pytest.param(CIRCLE, id="Circle")]
    )
    def test_negative_gradient_indexes(self, field: ScalarField, expected: int, orbit: Orbit):
        value = poincare_index(orbit, negative_gradient_field(field))
        assert value == pytest.approx(expected, abs=0.15)

    def test_center_of_the_hamiltonian_system(self):
        df = normalize(derive_systems(bowl())[1])
        assert poincare_index(SQUARE, df) == pytest.approx(1.0, abs=0.15)

    def test_indexes_add_up(self):
        df = negative_gradient_field(sink_and_saddle())

        around_both = orient_positive(square_orbit(20, 20, 12))
        around_sink = orient_positive(square_orbit(25, 20, 3))
        around_saddle = orient_positive(square_orbit(15, 20, 3))

        assert poincare_index(around_sink, df) == pytest.approx(1.0, abs=0.2)
        assert poincare_index(around_saddle, df) == pytest.approx(-1.0, abs=0.2)
        assert poincare_index(around_both, df) == pytest.approx(0.0, abs=0.2)

    def test_reversal_negates_exactly(self):
        df = negative_gradient_field(noisy(saddle(), 0.05, seed=2))

        forward = poincare_index(SQUARE, df)

        assert poincare_index(SQUARE.reversed(), df) == -forward

    def test_quadrant_rule_on_smooth_field(self):
        df = negative_gradient_field(bowl())
        assert poincare_index(SQUARE, df, rule="quadrant") == pytest.approx(
            poincare_index(SQUARE, df), abs=1e-9
        )

    @pytest.mark.parametrize("seed", [1, 2, 3])
    @pytest.mark.parametrize(
        "field,expected",
        [
            pytest.param(bowl(), 1, id="Sink"),
            pytest.param(inverted_bowl(), 1, id="Source"),
            pytest.param(saddle(), -1, id="Saddle"),
        ],
    )
    def test_stable_under_noise(self, field: ScalarField, expected: int, seed: int):
        df = negative_gradient_field(noisy(field, 0.05, seed))
        assert round(poincare_index(SQUARE, df)) == expected

    def test_stationary_point_on_the_orbit(self):
        df = negative_gradient_field(ScalarField(np.full((41, 41), 9.0)))

        with pytest.raises(NumericError, match="stationary"):
            poincare_index(SQUARE, df)
        assert poincare_index(SQUARE, df, stationary="skip") == 0.0

    @pytest.mark.parametrize(
        "orbit",
        [
            pytest.param(Orbit(points=((0, 0), (1, 0), (2, 0), (3, 0)), closed=False), id="Open"),
            pytest.param(Orbit(points=((0, 0), (1, 0), (1, 1)), closed=True), id="Too short"),
            pytest.param(square_orbit(40, 40, 3), id="Outside the field"),
        ],
    )
    def test_rejects(self, orbit: Orbit):
        with pytest.raises(DataError):
            poincare_index(orbit, negative_gradient_field(bowl()))


class TestConley:
    @pytest.mark.parametrize(
        "field,ratio,kind",
        [
            pytest.param(bowl(), 0.0, "S0", id="Sink"),
            pytest.param(inverted_bowl(), 1.0, "S2", id="Source"),
            pytest.param(saddle(), 30 / 64, "S1", id="Saddle"),
        ],
    )
    def test_critical_points(self, field: ScalarField, ratio: float, kind: str):
        flow = boundary_flow(SQUARE, negative_gradient(field))

        assert continuous_conley(flow) == pytest.approx(ratio)
        assert str(discrete_conley(flow)) == kind

    def test_saddle_has_two_exit_runs(self):
        flow = boundary_flow(SQUARE, negative_gradient(saddle()))
        assert flow.exit_runs() == 2

    def test_orientation_does_not_matter(self):
        vf = negative_gradient(saddle())

        forward = boundary_flow(SQUARE, vf)
        backward = boundary_flow(SQUARE.reversed(), vf)

        assert backward.exit_flags == forward.exit_flags[::-1]

    @pytest.mark.parametrize("seed", [1, 2, 3])
    @pytest.mark.parametrize(
        "field,kind",
        [
            pytest.param(bowl(), "S0", id="Sink"),
            pytest.param(inverted_bowl(), "S2", id="Source"),
            pytest.param(saddle(), "S1", id="Saddle"),
        ],
    )
    def test_stable_under_noise(self, field: ScalarField, kind: str, seed: int):
        flow = boundary_flow(SQUARE, negative_gradient(noisy(field, 0.05, seed)))
        assert str(discrete_conley(flow)) == kind

    def test_constant_field_only_enters(self):
        flow = boundary_flow(SQUARE, negative_gradient(ScalarField(np.full((41, 41), 1.0))))

        assert continuous_conley(flow) == 0.0
        assert discrete_conley(flow) == ConleyType(ConleyKind.TWO_POINT_SET)

    @pytest.mark.parametrize(
        "flags,expected",
        [
            pytest.param([False, False, False, False], "S0", id="Only entering"),
            pytest.param([True, True, True, True], "S2", id="Only exiting"),
            pytest.param([True, True, False, False], "D2", id="One exit run"),
            pytest.param([True, False, False, True], "D2", id="One exit run across the seam"),
            pytest.param([True, False, True, False], "S1", id="Two exit runs"),
            pytest.param([True, False, True, False, True, False], "S1 v S1", id="Three exit runs"),
        ],
    )
    def test_discrete_types(self, flags: list, expected: str):
        assert str(discrete_conley(BoundaryFlow.from_flags(flags))) == expected

    def test_boundary_flow_counts_must_agree(self):
        with pytest.raises(DataError):
            BoundaryFlow(exit_flags=(True, False), entering_count=0, exiting_count=2)

    @pytest.mark.parametrize(
        "kind,circles",
        [
            pytest.param(ConleyKind.WEDGE_OF_CIRCLES, 0, id="Wedge without circles"),
            pytest.param(ConleyKind.DISK, 2, id="Disk with circles"),
        ],
    )
    def test_invalid_conley_types(self, kind: ConleyKind, circles: int):
        with pytest.raises(DataError):
            ConleyType(kind, circles)

    def test_open_orbit(self):
        orbit = Orbit(points=((0, 0), (1, 0), (2, 0), (3, 0)), closed=False)
        with pytest.raises(DataError):
            boundary_flow(orbit, negative_gradient(bowl()))
