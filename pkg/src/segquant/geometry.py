"""Geometry of the diagonal constraint family over the unit support segment.

The target measure lives on the support segment J = [0, 1] x {0}.  Quantizer
points are restricted to the segments

    S_j = {(x, x + 1/j) : -1/j <= x <= 1},    j = 1, 2, ...

which are parallel to the diagonal y = x, one per positive index j.  The line
perpendicular to S_j through one of its points (x, x + 1/j) meets the x-axis
at (2x + 1/j, 0); we call that abscissa the point's *foot*.  Foot-taking is a
bijection between S_j and an interval of the axis (equivalently: a constraint
point is the nearest point of S_j to its own foot), and it is the coordinate
system in which the fixed-point solver operates.

Scalar functions here are duck-typed: passing fractions.Fraction coordinates
yields exact rational results, floats yield floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class DegenerateBoundaryError(ValueError):
    """The bisector of the two given points never crosses the support axis."""


def _check_index(j: int) -> None:
    if isinstance(j, bool) or not isinstance(j, int) or j < 1:
        raise ValueError(f"constraint index must be a positive integer, got {j!r}")


@dataclass(frozen=True)
class Point:
    """A point of the plane with finite coordinates."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x!r}, {self.y!r})")


@dataclass(frozen=True)
class ConstraintPoint:
    """A point of S_j, stored as (j, x) so membership is structural.

    The plane coordinates are (x, x + 1/j); x must lie in [-1/j, 1].
    """

    j: int
    x: float

    def __post_init__(self) -> None:
        _check_index(self.j)
        if not math.isfinite(self.x):
            raise ValueError(f"abscissa must be finite, got {self.x!r}")
        if not -Fraction(1, self.j) <= self.x <= 1:
            raise ValueError(
                f"abscissa {self.x!r} outside [-1/{self.j}, 1] for constraint {self.j}"
            )


def squared_distance(p: Point, q: Point) -> float:
    """Squared Euclidean distance between two plane points."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def embed(cp: ConstraintPoint) -> Point:
    """Plane coordinates (x, x + 1/j) of a constraint point."""
    return Point(cp.x, cp.x + Fraction(1, cp.j))


def forward_map(cp: ConstraintPoint) -> float:
    """Foot abscissa 2x + 1/j of a constraint point.

    Strictly increasing in x for fixed j, hence invertible.
    """
    return 2 * cp.x + Fraction(1, cp.j)


def inverse_map(j: int, foot: float) -> ConstraintPoint:
    """The unique point of S_j whose foot is the given abscissa.

    Rejects feet whose preimage abscissa (foot - 1/j)/2 leaves [-1/j, 1].
    """
    _check_index(j)
    x = (foot - Fraction(1, j)) / 2
    return ConstraintPoint(j, x)


def feasible_foot_range(j: int) -> tuple[float, float]:
    """Abscissa bounds of the points of S_j whose feet lie inside [0, 1].

    The sub-segment of S_j with x in [-1/(2j), 1/2 - 1/(2j)] has feet sweeping
    exactly [0, 1]; this returns that abscissa range.  As j grows it tends to
    (0, 1/2).
    """
    _check_index(j)
    half = Fraction(1, 2 * j)
    return (float(-half), float(Fraction(1, 2) - half))


def bisector_abscissa(p: Point, q: Point) -> float:
    """Abscissa where the perpendicular bisector of p and q meets the x-axis.

    Solves |(u,0) - p|^2 = |(u,0) - q|^2 for u, which requires p.x != q.x;
    equal abscissas make the bisector parallel to (or disjoint from) the axis.
    """
    if p.x == q.x:
        raise DegenerateBoundaryError(
            f"points with equal abscissas {p.x!r} have no axis crossing"
        )
    sp = p.x * p.x + p.y * p.y
    sq = q.x * q.x + q.y * q.y
    return (sq - sp) / (2 * (q.x - p.x))


def voronoi_breakpoint(p: ConstraintPoint, q: ConstraintPoint) -> float:
    """Support abscissa equidistant from two embedded constraint points.

    Points of the support left of the breakpoint are nearer to embed(p),
    points right of it nearer to embed(q), provided p's embedded abscissa is
    the smaller one.  When both points lie on the same constraint S_t this
    reduces to p.x + q.x + 1/t.
    """
    return bisector_abscissa(embed(p), embed(q))
