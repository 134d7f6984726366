"""Floating-point oracle for the finite-dimensional geometry.

The symbolic modules own the topology; this module samples the varieties as
sets of unit-quaternion tuples and checks the geometric facts the closed
forms rest on: the product-of-squares map and its differential, square-root
fibers, the sphere-times-circle chart of the first regular variety, and
fixed-point/dimension diagnostics.

Randomness is always drawn from an explicitly seeded generator, so every
report is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import quaternions as quat
from .targets import SurfaceTarget, TargetKind

#: Residual tolerance used by the pass/fail checks.
RESIDUAL_TOL = 1e-10

#: Singular values above this threshold count toward the rank.
RANK_TOL = 1e-6


def box(points):
    """Ordered product of squares of the tuple entries (left to right)."""
    points = np.asarray(points, dtype=float)
    out = np.broadcast_to(quat.IDENTITY, points[..., 0, :].shape).copy()
    for k in range(points.shape[-2]):
        out = quat.mul(out, quat.square(points[..., k, :]))
    return out


def box_differential(points):
    """Differential of the product of squares in the right-trivialized frame.

    Returns (..., 3, 3m) matrices whose k-th 3x3 block is
    Ad(prefix_k) (I + Ad(g_k)) with prefix_k the product of the first k
    squares.  Full rank 3 marks a regular point.
    """
    points = np.asarray(points, dtype=float)
    m = points.shape[-2]
    prefix = np.broadcast_to(quat.IDENTITY, points[..., 0, :].shape).copy()
    eye = np.eye(3)
    blocks = []
    for k in range(m):
        g_k = points[..., k, :]
        block = quat.rotation_matrix(prefix) @ (eye + quat.rotation_matrix(g_k))
        blocks.append(block)
        prefix = quat.mul(prefix, quat.square(g_k))
    return np.concatenate(blocks, axis=-1)


def box_singular_values(points):
    """Singular values (..., 3) of the differential, descending."""
    return np.linalg.svd(box_differential(points), compute_uv=False)


def box_differential_rank(point, tol: float = RANK_TOL) -> int:
    """Numerical rank (0..3) of the differential at one tuple."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    values = box_singular_values(np.asarray(point, dtype=float))
    return int(np.sum(values > tol))


def box_rank_batch(points, tol: float = RANK_TOL):
    values = box_singular_values(points)
    return np.sum(values > tol, axis=-1)


def conjugate_tuple(points, g):
    """Simultaneous conjugation of every tuple entry by g."""
    points = np.asarray(points, dtype=float)
    g = np.asarray(g, dtype=float)
    g_b = np.broadcast_to(g[..., None, :], points.shape)
    return quat.mul(quat.mul(g_b, points), quat.conj(g_b))


def flip_zeroth(points):
    """Negate the 0th entry; the product of squares is unchanged exactly."""
    points = np.asarray(points, dtype=float).copy()
    points[..., 0, :] = -points[..., 0, :]
    return points


def singular_example(n: int):
    """The tuple (J, ..., J) with J*J = -1, a critical point of the product map."""
    j = np.array([0.0, 0.0, 1.0, 0.0])
    return np.tile(j, (n + 1, 1))


def fixed_point_residual(point) -> float:
    """Distance of a tuple from the torus-fixed locus.

    Zero exactly when every entry lies on the torus circle w + x*i; measured
    as the largest magnitude of the components orthogonal to the torus axis.
    """
    point = np.asarray(point, dtype=float)
    return float(np.max(np.hypot(point[..., 2], point[..., 3])))


@dataclass(frozen=True)
class SqrtFiber:
    """Solutions of h*h = g: two antipodal points, or a 2-sphere when g = -1."""

    kind: str  # "two_points" or "two_sphere"
    points: np.ndarray | None = None

    def sphere_point(self, axis):
        """Point of the sphere fiber at a given unit imaginary direction."""
        if self.kind != "two_sphere":
            raise ValueError("only the sphere fiber is parametrized by an axis")
        axis = np.asarray(axis, dtype=float)
        return np.concatenate([np.zeros(axis.shape[:-1] + (1,)), axis], axis=-1)


def sqrt_fiber(g, tol: float = 1e-9) -> SqrtFiber:
    """The square-root fiber of a unit quaternion.

    Away from -1 the fiber is the antipodal pair through the half angle; at
    (or within ``tol`` of) -1 it is the 2-sphere of unit imaginary
    quaternions, i.e. the rotation angle pi/2 shell.  Returned point
    solutions satisfy |h*h - g| <= 10*tol.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    g = quat.normalize(g)
    if np.linalg.norm(g - quat.MINUS_IDENTITY) <= tol:
        return SqrtFiber("two_sphere")
    root = quat.principal_sqrt(g)
    return SqrtFiber("two_points", np.stack([root, -root]))


@dataclass(frozen=True)
class ChartReport:
    samples: int
    max_relation_residual: float
    max_equivariance_residual: float
    min_output_separation: float
    min_input_separation: float

    @property
    def passed(self) -> bool:
        return (
            self.max_relation_residual <= RESIDUAL_TOL
            and self.max_equivariance_residual <= RESIDUAL_TOL
            and self.min_output_separation > 1e-8
        )


def x1r_chart(axes, angles):
    """Chart of the first regular variety from (sphere direction, angle).

    F(X, t) = (exp(t X), exp((pi/2 - t) X)); the squares multiply to
    exp(pi X) = -1 identically, so the image lies on the variety.
    """
    axes = np.asarray(axes, dtype=float)
    angles = np.asarray(angles, dtype=float)[..., None]
    first = quat.exp_im(angles * axes)
    second = quat.exp_im((np.pi / 2 - angles) * axes)
    return np.stack([first, second], axis=-2)


def x1r_chart_check(samples: int, seed: int = 0) -> ChartReport:
    """Sample the chart and measure the residuals of its defining properties."""
    if samples <= 0:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    axes = quat.random_axis(rng, samples)
    angles = rng.uniform(0.0, 2.0 * np.pi, samples)
    points = x1r_chart(axes, angles)

    relation = quat.mul(quat.square(points[:, 0]), quat.square(points[:, 1]))
    relation_residual = float(np.max(quat.dist(relation, quat.MINUS_IDENTITY)))

    g = quat.random_unit(rng, samples)
    rotated_axes = np.einsum("nij,nj->ni", quat.rotation_matrix(g), axes)
    left = x1r_chart(rotated_axes, angles)
    right = conjugate_tuple(points, g)
    equivariance_residual = float(np.max(quat.dist(left, right)))

    # Injectivity proxy on a subsample: distinct inputs stay separated.
    keep = min(samples, 256)
    flat = points[:keep].reshape(keep, 8)
    diff = np.linalg.norm(flat[:, None, :] - flat[None, :, :], axis=-1)
    inputs = np.concatenate([axes[:keep], np.cos(angles[:keep, None]), np.sin(angles[:keep, None])], axis=1)
    input_diff = np.linalg.norm(inputs[:, None, :] - inputs[None, :, :], axis=-1)
    off_diag = ~np.eye(keep, dtype=bool)
    return ChartReport(
        samples=samples,
        max_relation_residual=relation_residual,
        max_equivariance_residual=equivariance_residual,
        min_output_separation=float(diff[off_diag].min()),
        min_input_separation=float(input_diff[off_diag].min()),
    )


@dataclass(frozen=True)
class VarietySample:
    target: SurfaceTarget
    points: np.ndarray = field(repr=False)
    local_dimensions: np.ndarray = field(repr=False)
    max_constraint_residual: float

    @property
    def count(self) -> int:
        return self.points.shape[0]

    @property
    def expected_dimension(self) -> int:
        n = self.target.n
        return 3 * n + 2 if self.target.kind is TargetKind.GENERIC else 3 * n


def sample_variety(n: int, target_kind: TargetKind, count: int, seed: int = 0, tol: float = 1e-9) -> VarietySample:
    """Draw points of the variety and estimate the local dimension at each.

    The tail entries are Haar distributed and the 0th entry solves the fiber
    equation through the square-root map; when the required square is the
    degenerate value -1 the extra sphere parameter is drawn uniformly.  The
    local dimension is 3(n+1) minus the numerical rank of the constraint
    differential (all three rows for a central class, the trace row for a
    generic class).
    """
    if count <= 0:
        raise ValueError("need at least one sample")
    if n < 0:
        raise ValueError("n must be non-negative")
    target = SurfaceTarget(target_kind, n)
    rng = np.random.default_rng(seed)
    tail = quat.random_unit(rng, (count, n)) if n else np.zeros((count, 0, 4))
    tail_product = box(tail) if n else np.broadcast_to(quat.IDENTITY, (count, 4)).copy()

    if target_kind is TargetKind.CENTRAL_PLUS:
        values = np.broadcast_to(quat.IDENTITY, (count, 4))
    elif target_kind is TargetKind.CENTRAL_MINUS:
        values = np.broadcast_to(quat.MINUS_IDENTITY, (count, 4))
    else:
        # Trace-zero conjugacy class: uniform pure imaginary unit values.
        values = np.concatenate([np.zeros((count, 1)), quat.random_axis(rng, count)], axis=1)

    needed_square = quat.mul(values, quat.conj(tail_product))
    near_minus = quat.dist(needed_square, quat.MINUS_IDENTITY) <= tol
    roots = quat.principal_sqrt(needed_square)
    sphere = np.concatenate([np.zeros((count, 1)), quat.random_axis(rng, count)], axis=1)
    zeroth = np.where(near_minus[:, None], sphere, roots)
    signs = rng.choice([-1.0, 1.0], size=(count, 1))
    zeroth = zeroth * signs
    points = np.concatenate([zeroth[:, None, :], tail], axis=1)

    if target_kind is TargetKind.GENERIC:
        residual = float(np.max(np.abs(quat.trace(box(points)) - quat.trace(values))))
        differential = box_differential(points)
        row = np.einsum("ni,nij->nj", box(points)[:, 1:], differential)
        ranks = (np.linalg.norm(row, axis=-1) > RANK_TOL).astype(int)
    else:
        residual = float(np.max(quat.dist(box(points), values)))
        ranks = box_rank_batch(points)
    dims = 3 * (n + 1) - ranks
    return VarietySample(target, points, dims, residual)


def numeric_check_suite(seed: int = 0, samples: int = 2000) -> list[dict]:
    """Run every geometric check at a modest sample count; JSON-ready rows."""
    rng = np.random.default_rng(seed)
    checks = []

    def add(name, n_samples, residual, passed):
        checks.append(
            {
                "check_name": name,
                "samples": int(n_samples),
                "max_residual": float(residual),
                "pass": bool(passed),
            }
        )

    tuples = quat.random_unit(rng, (samples, 3))
    g = quat.random_unit(rng, samples)
    residual = float(np.max(quat.dist(box(conjugate_tuple(tuples, g)), quat.mul(quat.mul(g, box(tuples)), quat.conj(g)))))
    add("box_conjugation_equivariance", samples, residual, residual <= 1e-12)

    residual = float(np.max(quat.dist(box(flip_zeroth(tuples)), box(tuples))))
    add("zeroth_flip_invariance", samples, residual, residual == 0.0)

    g = quat.random_unit(rng, samples)
    residual = float(np.max(quat.dist(quat.square(quat.principal_sqrt(g)), g)))
    add("sqrt_roundtrip", samples, residual, residual <= 1e-9)

    fiber = sqrt_fiber(quat.MINUS_IDENTITY)
    axes = quat.random_axis(rng, samples)
    residual = float(np.max(quat.dist(quat.square(fiber.sphere_point(axes)), quat.MINUS_IDENTITY)))
    ok = fiber.kind == "two_sphere" and sqrt_fiber(quat.IDENTITY).kind == "two_points"
    add("sqrt_degenerate_fiber", samples, residual, ok and residual <= 1e-12)

    chart = x1r_chart_check(samples, seed)
    add(
        "x1r_chart",
        samples,
        max(chart.max_relation_residual, chart.max_equivariance_residual),
        chart.passed,
    )

    points = quat.random_unit(rng, (samples, 3))
    values = box_singular_values(points)
    regular_floor = float(values[:, 2].min())
    singular_third = float(box_singular_values(singular_example(2))[2])
    gap_ok = (
        bool(np.all(values[:, 2] > RANK_TOL))
        and box_differential_rank(singular_example(2)) < 3
        and regular_floor >= 1e4 * max(singular_third, 1e-300)
    )
    add("regular_rank_gap", samples, singular_third, gap_ok)

    diag = np.zeros((samples, 2, 4))
    angles = rng.uniform(0.0, 2.0 * np.pi, (samples, 2))
    diag[..., 0] = np.cos(angles)
    diag[..., 1] = np.sin(angles)
    residual = max(fixed_point_residual(diag[i]) for i in range(samples))
    conjugated = conjugate_tuple(diag, quat.random_unit(rng, samples))
    moved = max(fixed_point_residual(conjugated[i]) for i in range(samples))
    add("fixed_point_residual", samples, residual, residual <= 1e-12 and moved > 1e-6)

    return checks
