"""Quantizers on the constraint family, their partitions, and a Lloyd solver.

A quantizer is an ordered tuple of constraint points; its Voronoi partition
of the support [0, 1] is cut at the bisector abscissas of consecutive
embedded points.  For points all on one constraint S_t the two Lloyd half
steps take a simple form in foot coordinates: breakpoints are midpoints of
consecutive feet, and each new foot is the midpoint of its cell.  That is
the classic fixed-point iteration for uniform one-dimensional quantization,
a contraction with rate cos^2(pi / (2n)), so the solver converges to the
unique fixed point with equispaced feet (2j - 1) / (2n) from any valid
start.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .geometry import ConstraintPoint, forward_map, inverse_map, voronoi_breakpoint
from .measure import (
    UNIFORM,
    SupportInterval,
    ZeroMassError,
    optimal_interval_distortion,
)

log = logging.getLogger(__name__)


class InvalidQuantizerError(ValueError):
    """The quantizer induces no valid partition (some cell collapses).

    index, when set, is the 0-based position of the offending cell.
    """

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class Quantizer:
    """Ordered tuple of constraint points with strictly increasing feet.

    Strict foot ordering also rules out duplicate embedded points (equal
    plane points have equal feet), so construction enforces both at once.
    """

    points: tuple[ConstraintPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise InvalidQuantizerError("a quantizer needs at least one point")
        for p in points:
            if not isinstance(p, ConstraintPoint):
                raise TypeError(f"expected ConstraintPoint, got {p!r}")
        feet = [forward_map(p) for p in points]
        for i in range(len(feet) - 1):
            if not feet[i] < feet[i + 1]:
                raise InvalidQuantizerError(
                    f"feet must be strictly increasing, got {feet[i]!r} before "
                    f"{feet[i + 1]!r} at position {i}",
                    index=i,
                )

    @property
    def n(self) -> int:
        return len(self.points)

    def feet(self) -> tuple[float, ...]:
        return tuple(forward_map(p) for p in self.points)

    def abscissas(self) -> tuple[float, ...]:
        return tuple(p.x for p in self.points)


@dataclass(frozen=True)
class Partition:
    """Breakpoints 0 = c_0 < c_1 < ... < c_n = 1 of the support segment."""

    breakpoints: tuple[float, ...]

    def __post_init__(self) -> None:
        cuts = tuple(self.breakpoints)
        object.__setattr__(self, "breakpoints", cuts)
        if len(cuts) < 2 or cuts[0] != 0 or cuts[-1] != 1:
            raise InvalidQuantizerError(
                f"breakpoints must run from 0 to 1, got {cuts!r}"
            )
        for i in range(len(cuts) - 1):
            if not cuts[i] < cuts[i + 1]:
                raise InvalidQuantizerError(
                    f"breakpoints must be strictly increasing, cell {i} collapses",
                    index=i,
                )

    @property
    def cells(self) -> tuple[SupportInterval, ...]:
        cuts = self.breakpoints
        return tuple(
            SupportInterval(cuts[i], cuts[i + 1]) for i in range(len(cuts) - 1)
        )


def partition_of(q: Quantizer) -> Partition:
    """Voronoi partition of the support induced by the quantizer.

    Interior breakpoints are clamped into [0, 1]; if any cell then collapses
    the quantizer has an empty cell and is rejected.
    """
    cuts = [0]
    for left, right in zip(q.points, q.points[1:]):
        c = voronoi_breakpoint(left, right)
        cuts.append(min(max(c, 0), 1))
    cuts.append(1)
    for i in range(len(cuts) - 1):
        if not cuts[i] < cuts[i + 1]:
            raise InvalidQuantizerError(
                f"cell {i} of the induced partition is empty", index=i
            )
    return Partition(tuple(cuts))


def distortion(q: Quantizer) -> float:
    """Mean squared distance from the uniform support to the quantizer."""
    part = partition_of(q)
    return sum(
        UNIFORM.interval_distortion(cell, p)
        for cell, p in zip(part.cells, q.points)
    )


def lloyd_step(q: Quantizer, t: int) -> Quantizer:
    """One Lloyd iteration for a quantizer supported on S_t.

    Repartitions, then moves each point to the S_t point nearest its cell's
    barycenter.  A barycenter whose preimage abscissa leaves [-1/t, 1] is
    clamped to the segment end and the event is logged.
    """
    for p in q.points:
        if p.j != t:
            raise ValueError(f"point {p!r} is not on constraint {t}")
    part = partition_of(q)
    lo, hi = -Fraction(1, t), 1
    new_points = []
    for i, cell in enumerate(part.cells):
        try:
            mean = UNIFORM.conditional_mean(cell)
        except ZeroMassError as exc:
            raise InvalidQuantizerError(f"cell {i} has zero mass", index=i) from exc
        x = (mean.x - Fraction(1, t)) / 2
        if x < lo or x > hi:
            log.warning("cell %d barycenter leaves S_%d, clamping abscissa %r", i, t, x)
            x = min(max(x, lo), hi)
        new_points.append(ConstraintPoint(t, x))
    return Quantizer(tuple(new_points))


@dataclass(frozen=True)
class SolverConfig:
    """Stopping rule and initialization for the fixed-point solver.

    tol bounds the max foot movement of the last sweep; init is either
    "equispaced-feet" (feet (2j - 1) / (2n), displaced by +0.1/n on odd
    1-based indices so convergence is observable) or "explicit" with
    init_feet supplying strictly increasing feet.
    """

    tol: float = 1e-12
    max_iter: int = 10_000
    init: str = "equispaced-feet"
    init_feet: Optional[tuple[float, ...]] = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise ValueError(f"tol must be a positive finite float, got {self.tol!r}")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter!r}")
        if self.init not in ("equispaced-feet", "explicit"):
            raise ValueError(f"unknown init mode {self.init!r}")
        if self.init == "explicit" and not self.init_feet:
            raise ValueError("init='explicit' requires init_feet")


@dataclass(frozen=True)
class SolverOutcome:
    """Result of a solver run; converged means the movement criterion held."""

    quantizer: Quantizer
    distortion: float
    iterations: int
    converged: bool


def _perturbed_equispaced_feet(n: int) -> list[float]:
    bump = 0.1 / n
    return [(2 * j - 1) / (2 * n) + (bump if j % 2 == 1 else 0.0) for j in range(1, n + 1)]


def _raise_collapsed(cuts: np.ndarray) -> None:
    clamped = np.clip(cuts, 0.0, 1.0)
    bad = np.nonzero(np.diff(clamped) <= 0)[0]
    i = int(bad[0])
    raise InvalidQuantizerError(f"cell {i} of the induced partition is empty", index=i)


def _solve_loop(
    x0: np.ndarray, inv_t: float, tol: float, max_iter: int
) -> tuple[np.ndarray, int, float]:
    """Lloyd sweeps in foot coordinates, vectorized over the points.

    Same-constraint breakpoints reduce to x_left + x_right + 1/t, and cell
    midpoints pull back to abscissa (c_left + c_right)/4 - 1/(2t); one sweep
    of this loop therefore equals lloyd_step.  A valid state (strictly
    increasing feet, interior breakpoints) maps to a valid state, so only
    breakpoint escapes past 0 or 1 need checking.
    """
    n = x0.size
    x = x0.copy()
    xn = np.empty(n)
    cuts = np.empty(n + 1)
    cuts[0] = 0.0
    cuts[-1] = 1.0
    delta = np.empty(n)
    half_inv_t = 0.5 * inv_t
    iterations = 0
    movement = math.inf
    for iterations in range(1, max_iter + 1):
        np.add(x[:-1], x[1:], out=cuts[1:n])
        cuts[1:n] += inv_t
        if n > 1 and (cuts[1] < 0.0 or cuts[n - 1] > 1.0):
            _raise_collapsed(cuts)
        np.add(cuts[:-1], cuts[1:], out=xn)
        xn *= 0.25
        xn -= half_inv_t
        np.subtract(xn, x, out=delta)
        np.abs(delta, out=delta)
        movement = 2.0 * float(delta.max())
        x, xn = xn, x
        if movement <= tol:
            break
    return x, iterations, movement


def solve_fixed_constraint(
    n: int, t: int, config: Optional[SolverConfig] = None
) -> SolverOutcome:
    """Fixed-point solver for the best n points on the single constraint S_t.

    Iterates Lloyd sweeps until the max foot movement drops to config.tol or
    max_iter sweeps have run; converged reports which happened.  The fixed
    point has feet (2j - 1) / (2n) regardless of t.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    cfg = config if config is not None else SolverConfig()
    if cfg.init == "equispaced-feet":
        feet = _perturbed_equispaced_feet(n)
    else:
        feet = [float(f) for f in cfg.init_feet]
        if len(feet) != n:
            raise ValueError(f"init_feet has {len(feet)} entries, expected {n}")
    # validates t and that every starting foot has a preimage on S_t
    start = [inverse_map(t, f) for f in feet]
    Quantizer(tuple(start))
    inv_t = 1.0 / t
    x0 = np.array([float(p.x) for p in start])
    x, iterations, movement = _solve_loop(x0, inv_t, cfg.tol, cfg.max_iter)
    q = Quantizer(tuple(ConstraintPoint(t, float(v)) for v in x))
    return SolverOutcome(
        quantizer=q,
        distortion=distortion(q),
        iterations=iterations,
        converged=movement <= cfg.tol,
    )


def best_constraint_index(iv: SupportInterval, n: int) -> int:
    """Constraint index in 1..n whose best point quantizes iv cheapest.

    Computed by direct comparison; by the strict monotonicity of the
    per-interval optimum in the index, the answer is always n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    best_t = 1
    best_v = optimal_interval_distortion(iv, 1)
    for t in range(2, n + 1):
        v = optimal_interval_distortion(iv, t)
        if v < best_v:
            best_t, best_v = t, v
    return best_t
