"""Closed-form sphere and polygon geometry for unit-distance embeddings.

Sphere dimension convention: a d-dimensional sphere spans a d-dimensional
affine subspace, so a 1-dimensional sphere is a point pair and a
2-dimensional sphere is a circle. This keeps the dimension of the ambient
space a sphere "uses" explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

TANGENT_TOL = 1e-12
SELF_DUAL_RADIUS = math.sqrt(2.0) / 2.0


class GeometryError(ValueError):
    """Domain error or degenerate input to a closed-form operation."""


# ---------------------------------------------------------------------------
# Spheres
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphereSpec:
    """A sphere of dimension sphere_dim living in R^ambient_dim.

    carrier is an orthonormal basis (sphere_dim rows) of the linear part of
    the affine subspace containing the sphere.
    """

    ambient_dim: int
    sphere_dim: int
    center: np.ndarray
    radius: float
    carrier: np.ndarray

    def __post_init__(self):
        center = np.asarray(self.center, dtype=float)
        carrier = np.asarray(self.carrier, dtype=float).reshape(self.sphere_dim, -1)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "carrier", carrier)
        if self.sphere_dim < 1 or self.sphere_dim > self.ambient_dim:
            raise GeometryError("need 1 <= sphere_dim <= ambient_dim")
        if center.shape != (self.ambient_dim,):
            raise GeometryError("center must have ambient_dim coordinates")
        if carrier.shape != (self.sphere_dim, self.ambient_dim):
            raise GeometryError("carrier must be sphere_dim x ambient_dim")
        if self.radius <= 0:
            raise GeometryError("radius must be positive")
        gram = carrier @ carrier.T
        if not np.allclose(gram, np.eye(self.sphere_dim), atol=1e-9):
            raise GeometryError("carrier rows must be orthonormal")

    def sample_points(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Random points on the sphere (rows), via the carrier basis."""
        raw = rng.normal(size=(count, self.sphere_dim))
        raw /= np.linalg.norm(raw, axis=1, keepdims=True)
        return self.center + self.radius * raw @ self.carrier


EMPTY = "empty"
POINT = "point"
SPHERE = "sphere"


@dataclass(frozen=True)
class IntersectionResult:
    kind: str
    point: Optional[np.ndarray] = None
    sphere: Optional[SphereSpec] = None


def _carrier_complement(carrier: np.ndarray, ambient: int) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of carrier's row space."""
    k = carrier.shape[0]
    if k == ambient:
        return np.zeros((0, ambient))
    # Full SVD of the carrier exposes the null space in the trailing rows of Vt.
    _, _, vt = np.linalg.svd(np.vstack([carrier, np.zeros((ambient - k, ambient))]))
    return vt[k:]


def intersect_spheres(s1: SphereSpec, s2: SphereSpec) -> IntersectionResult:
    """Intersect two co-dimensional spheres sharing a carrier subspace.

    With center distance d and radii r, q the discriminant is
    R = r^2 - ((r^2 - q^2 + d^2) / 2d)^2; negative means empty, zero (within
    tolerance) a single tangent point, positive a sphere one dimension down
    with radius sqrt(R).
    """
    if s1.ambient_dim != s2.ambient_dim or s1.sphere_dim != s2.sphere_dim:
        raise GeometryError("spheres must share ambient and sphere dimension")
    span1 = s1.carrier
    span2 = s2.carrier
    # Same carrier subspace: each basis row of one must lie in the other span.
    proj = span2 @ span1.T @ span1
    if not np.allclose(proj, span2, atol=1e-9):
        raise GeometryError("spheres must lie in the same affine subspace")
    delta = s2.center - s1.center
    d = float(np.linalg.norm(delta))
    if d < 1e-12:
        raise GeometryError("coincident centers: intersection is not a lower sphere")
    if not np.allclose(delta - (delta @ span1.T) @ span1, 0.0, atol=1e-9):
        raise GeometryError("centers must lie in the shared affine subspace")

    r, q = s1.radius, s2.radius
    a = (r * r - q * q + d * d) / (2.0 * d)
    disc = r * r - a * a
    axis = delta / d
    foot = s1.center + a * axis
    if disc < -TANGENT_TOL:
        return IntersectionResult(EMPTY)
    if abs(disc) <= TANGENT_TOL:
        return IntersectionResult(POINT, point=foot)
    if s1.sphere_dim == 1:
        # Two 1-dimensional spheres on a line meet in at most one point,
        # already covered by the tangent case; anything else is empty.
        return IntersectionResult(EMPTY)
    # Carrier of the result: the shared subspace minus the center axis.
    basis = span1
    axis_in_basis = basis @ axis
    # Project out the axis direction within the carrier coordinates.
    comp = _carrier_complement(axis_in_basis.reshape(1, -1), s1.sphere_dim)
    new_carrier = comp @ basis
    return IntersectionResult(
        SPHERE,
        sphere=SphereSpec(
            ambient_dim=s1.ambient_dim,
            sphere_dim=s1.sphere_dim - 1,
            center=foot,
            radius=math.sqrt(disc),
            carrier=new_carrier,
        ),
    )


def equidistant_sphere(s: SphereSpec, d: float, ambient: Optional[int] = None) -> SphereSpec:
    """The locus of points at distance d from every point of s.

    For d > radius this is the sphere of dimension ambient - sphere_dim with
    the same center, radius sqrt(d^2 - r^2), carrier orthogonal to s.
    """
    ambient = s.ambient_dim if ambient is None else ambient
    if ambient != s.ambient_dim:
        raise GeometryError("sphere must already live in the requested ambient space")
    if ambient <= s.sphere_dim:
        raise GeometryError("no orthogonal directions left in this ambient space")
    if d <= s.radius:
        raise GeometryError(f"distance {d} must exceed the sphere radius {s.radius}")
    comp = _carrier_complement(s.carrier, ambient)
    return SphereSpec(
        ambient_dim=ambient,
        sphere_dim=ambient - s.sphere_dim,
        center=s.center.copy(),
        radius=math.sqrt(d * d - s.radius * s.radius),
        carrier=comp,
    )


# ---------------------------------------------------------------------------
# The apex-radius map R(r) and its iterates
# ---------------------------------------------------------------------------

def cone_radius(r: float) -> float:
    """Radius of the sphere through a radius-r sphere plus one apex at distance 1.

    R(r) = 1 / (2 sqrt(1 - r^2)); fixed point at sqrt(2)/2.
    """
    if not 0.0 < r < 1.0:
        raise GeometryError(f"cone_radius needs 0 < r < 1, got {r}")
    return 1.0 / (2.0 * math.sqrt(1.0 - r * r))


@dataclass(frozen=True)
class IterationResult:
    value: Optional[float]       # R^n(r) when it stayed below 1, else None
    diverged_at: Optional[int]   # first step index whose output is >= 1
    steps: tuple                 # r, R(r), R^2(r), ... as computed


def iterate_cone_radius(r: float, n: int) -> IterationResult:
    """Compose cone_radius n times, stopping as soon as a value reaches 1."""
    if not 0.0 < r < 1.0:
        raise GeometryError(f"iterate_cone_radius needs 0 < r < 1, got {r}")
    if n < 0:
        raise GeometryError("iteration count must be >= 0")
    steps = [r]
    value = r
    for i in range(1, n + 1):
        value = cone_radius(value)
        steps.append(value)
        if value >= 1.0:
            return IterationResult(None, i, tuple(steps))
    return IterationResult(value, None, tuple(steps))


def simplex_radius(n: int) -> float:
    """Circumradius of the unique unit-edge embedding of the complete graph K_n.

    Computed as the (n-2)-fold iterate of cone_radius starting at 1/2; agrees
    with the closed form sqrt((n-1)/(2n)).
    """
    if n < 2:
        raise GeometryError("simplex_radius needs n >= 2")
    value = 0.5
    for _ in range(n - 2):
        value = cone_radius(value)
    return value


def divergence_step_bound(r: float) -> int:
    """Upper bound on the first n with R^n(r) > 1, valid for r > sqrt(2)/2."""
    if r <= SELF_DUAL_RADIUS:
        raise GeometryError("step bound only applies above the fixed point")
    delta = cone_radius(r) - r
    return math.ceil((1.0 - r) / delta)


# ---------------------------------------------------------------------------
# Regular polygon radii
# ---------------------------------------------------------------------------

DEGENERATE = "degenerate"
LT_1 = "lt_1"
EQ_1 = "eq_1"
GT_1 = "gt_1"


def star_polygon_radius(n: int, m: int) -> Optional[float]:
    """Circumradius of the unit-side regular polygon that skips m-1 vertices.

    Equals cos(m pi / n) / sin(2 m pi / n) = 1 / (2 sin(m pi / n)). Returns
    None when gcd(n, m) != 1 (the polygon revisits vertices and is not an
    embedding of the n-cycle).
    """
    if n < 3:
        raise GeometryError("polygon needs n >= 3")
    if not 1 <= m < n / 2:
        raise GeometryError(f"need 1 <= m < n/2, got m={m} for n={n}")
    if gcd(n, m) != 1:
        return None
    return 1.0 / (2.0 * math.sin(math.pi * m / n))


def classify_polygon_radius(n: int, m: int) -> str:
    """Compare the polygon radius against 1: the threshold is m = n/6."""
    if star_polygon_radius(n, m) is None:
        return DEGENERATE
    if 6 * m == n:
        return EQ_1
    return LT_1 if 6 * m > n else GT_1


def convex_polygon_radius(n: int) -> float:
    """Circumradius of the convex regular n-gon with unit sides."""
    value = star_polygon_radius(n, 1)
    assert value is not None  # gcd(n, 1) == 1 always
    return value


# ---------------------------------------------------------------------------
# Coordinate generators (exact constructions used as oracles and seeds)
# ---------------------------------------------------------------------------

def polygon_coords(n: int, m: int = 1) -> np.ndarray:
    """Vertex coordinates of the unit-side {n/m} polygon, centered at origin.

    Vertex k sits at angle 2 pi m k / n, so consecutive cycle edges have
    length exactly 1.
    """
    radius = star_polygon_radius(n, m)
    if radius is None:
        raise GeometryError(f"{{{n}/{m}}} is degenerate")
    angles = 2.0 * math.pi * m * np.arange(n) / n
    return radius * np.stack([np.cos(angles), np.sin(angles)], axis=1)


def simplex_coords(n: int) -> np.ndarray:
    """n points in R^(n-1), pairwise distance 1, centered at the circumcenter."""
    if n < 1:
        raise GeometryError("need n >= 1")
    if n == 1:
        return np.zeros((1, 1))
    # Scaled standard-basis construction: e_i / sqrt(2) has pairwise distance 1.
    pts = np.eye(n) / math.sqrt(2.0)
    pts -= pts.mean(axis=0)
    # Rotate into R^(n-1): project onto an orthonormal basis of the span.
    _, _, vt = np.linalg.svd(pts, full_matrices=False)
    basis = vt[: n - 1]
    return pts @ basis.T
