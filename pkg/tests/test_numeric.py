import numpy as np
import pytest

from su2rep import quaternions as quat
from su2rep.numeric import (
    ChartReport,
    box,
    box_differential_rank,
    box_rank_batch,
    box_singular_values,
    conjugate_tuple,
    fixed_point_residual,
    flip_zeroth,
    numeric_check_suite,
    sample_variety,
    singular_example,
    sqrt_fiber,
    x1r_chart,
    x1r_chart_check,
)
from su2rep.targets import TargetKind

RNG = np.random.default_rng(12345)

I = quat.IDENTITY
J = np.array([0.0, 0.0, 1.0, 0.0])


# -- product of squares -------------------------------------------------------


def test_box_of_identity_tuple():
    assert np.allclose(box(np.tile(I, (4, 1))), I)


def test_box_of_single_imaginary_unit():
    assert np.allclose(box(J[None, :]), quat.MINUS_IDENTITY)


def test_box_of_constant_imaginary_tuple():
    for n in range(4):
        expected = I if (n + 1) % 2 == 0 else quat.MINUS_IDENTITY
        assert np.allclose(box(singular_example(n)), expected)


def test_box_conjugation_equivariance():
    points = quat.random_unit(RNG, (200, 3))
    g = quat.random_unit(RNG, 200)
    left = box(conjugate_tuple(points, g))
    right = quat.mul(quat.mul(g, box(points)), quat.conj(g))
    assert np.max(quat.dist(left, right)) < 1e-12


def test_zeroth_flip_preserves_box_exactly():
    points = quat.random_unit(RNG, (200, 3))
    assert np.array_equal(box(flip_zeroth(points)), box(points))


# -- differential rank ----------------------------------------------------------


def test_rank_three_at_random_points():
    points = quat.random_unit(RNG, (500, 3))
    assert np.all(box_rank_batch(points) == 3)


def test_rank_drops_at_constant_imaginary_tuple():
    assert box_differential_rank(singular_example(2)) < 3


def test_rank_at_identity_singleton():
    # differential is xi -> 2 xi, full rank
    assert box_differential_rank(I[None, :]) == 3


def test_singular_value_gap():
    points = quat.random_unit(RNG, (500, 2))
    floor = box_singular_values(points)[:, 2].min()
    degenerate = box_singular_values(singular_example(1))[2]
    assert floor > 1e4 * max(degenerate, 1e-300)


def test_rank_requires_positive_tolerance():
    with pytest.raises(ValueError):
        box_differential_rank(singular_example(1), tol=0.0)


# -- square-root fibers ------------------------------------------------------------


def test_sqrt_of_identity_is_antipodal_pair():
    fiber = sqrt_fiber(I)
    assert fiber.kind == "two_points"
    assert np.allclose(sorted(fiber.points[:, 0]), [-1.0, 1.0])
    assert np.allclose(quat.square(fiber.points), np.stack([I, I]))


def test_sqrt_of_minus_identity_is_sphere():
    fiber = sqrt_fiber(quat.MINUS_IDENTITY)
    assert fiber.kind == "two_sphere"
    axes = quat.random_axis(RNG, 50)
    points = fiber.sphere_point(axes)
    assert np.max(quat.dist(quat.square(points), quat.MINUS_IDENTITY)) < 1e-12


def test_sqrt_half_angle_values():
    # rotation by pi/2 about the torus axis splits into angles pi/4 and pi/4 + pi
    g = np.array([0.0, 1.0, 0.0, 0.0])
    fiber = sqrt_fiber(g)
    expected = np.array([np.cos(np.pi / 4), np.sin(np.pi / 4), 0.0, 0.0])
    found = fiber.points
    assert np.allclose(found[0], expected) or np.allclose(found[1], expected)
    assert np.allclose(found[0], -found[1])


def test_sqrt_roundtrip_bulk():
    g = quat.random_unit(RNG, 10_000)
    residual = np.max(quat.dist(quat.square(quat.principal_sqrt(g)), g))
    assert residual < 1e-9


# -- the sphere-times-circle chart ----------------------------------------------------


def test_chart_lands_on_variety_at_zero_angle():
    axes = quat.random_axis(RNG, 10)
    points = x1r_chart(axes, np.zeros(10))
    assert np.allclose(points[:, 0], I)
    assert np.allclose(points[:, 1], quat.exp_im((np.pi / 2) * axes))


def test_chart_relation_identity():
    axes = quat.random_axis(RNG, 100)
    angles = RNG.uniform(0, 2 * np.pi, 100)
    points = x1r_chart(axes, angles)
    relation = quat.mul(quat.square(points[:, 0]), quat.square(points[:, 1]))
    assert np.max(quat.dist(relation, quat.MINUS_IDENTITY)) < 1e-12


def test_chart_check_passes():
    report = x1r_chart_check(2000, seed=0)
    assert isinstance(report, ChartReport)
    assert report.passed
    assert report.max_relation_residual <= 1e-10
    assert report.max_equivariance_residual <= 1e-10
    assert report.min_output_separation > 1e-8


def test_chart_check_rejects_empty_sample():
    with pytest.raises(ValueError):
        x1r_chart_check(0)


# -- fixed points -----------------------------------------------------------------------


def test_fixed_point_residual_of_torus_tuple_is_zero():
    angles = RNG.uniform(0, 2 * np.pi, 5)
    diagonal = np.stack([np.cos(angles), np.sin(angles), np.zeros(5), np.zeros(5)], axis=1)
    assert fixed_point_residual(diagonal) == 0.0


def test_fixed_point_residual_of_j_is_one():
    assert fixed_point_residual(J[None, :]) == 1.0


def test_fixed_point_residual_after_conjugation():
    angles = RNG.uniform(0, 2 * np.pi, 5)
    diagonal = np.stack([np.cos(angles), np.sin(angles), np.zeros(5), np.zeros(5)], axis=1)
    moved = conjugate_tuple(diagonal, quat.random_unit(RNG))
    assert fixed_point_residual(moved) > 1e-3


# -- variety sampling ----------------------------------------------------------------------


def test_sample_regular_one_crosscap_dimension():
    sample = sample_variety(1, TargetKind.CENTRAL_MINUS, 200, seed=1)
    assert sample.max_constraint_residual < 1e-9
    assert np.all(sample.local_dimensions == 3)
    assert sample.expected_dimension == 3


def test_sample_regular_two_crosscap_dimension():
    sample = sample_variety(2, TargetKind.CENTRAL_PLUS, 200, seed=2)
    assert np.all(sample.local_dimensions == 6)


def test_sample_zero_crosscaps_regular_is_finite():
    sample = sample_variety(0, TargetKind.CENTRAL_PLUS, 100, seed=3)
    assert np.all(sample.local_dimensions == 0)
    assert np.all(np.isclose(np.abs(sample.points[:, 0, 0]), 1.0))


def test_sample_zero_crosscaps_singular_is_sphere():
    sample = sample_variety(0, TargetKind.CENTRAL_MINUS, 100, seed=4)
    assert np.all(sample.local_dimensions == 2)
    assert np.max(np.abs(sample.points[:, 0, 0])) < 1e-9  # purely imaginary roots


def test_sample_generic_dimension():
    sample = sample_variety(1, TargetKind.GENERIC, 200, seed=5)
    assert np.all(sample.local_dimensions == 5)
    assert sample.expected_dimension == 5


def test_sample_rejects_bad_count():
    with pytest.raises(ValueError):
        sample_variety(1, TargetKind.CENTRAL_MINUS, 0)


def test_numeric_suite_all_pass():
    rows = numeric_check_suite(seed=0, samples=500)
    assert all(row["pass"] for row in rows)
    names = {row["check_name"] for row in rows}
    assert {"sqrt_roundtrip", "x1r_chart", "regular_rank_gap"} <= names
