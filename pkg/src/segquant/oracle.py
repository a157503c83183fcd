"""Independent checks: exhaustive grid search and direct Riemann integration.

brute_force knows nothing about the closed forms or the fixed-point solver:
it enumerates every assignment of the n points to constraint indices and
every combination of positions on a grid over each constraint's feasible
abscissa range (widened by one grid step on each side), then locally refines
around the incumbent with halved steps.  riemann_distortion integrates the
pointwise min squared distance with a midpoint rule, sharing no partition
logic with the quantizer module.  Both exist to confirm the rest of the
package, so they favor directness over speed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import quantizer as qz
from .geometry import ConstraintPoint, embed, feasible_foot_range

_FULL_SEARCH_MAX_N = 3


class BruteForceLimitError(ValueError):
    """Exhaustive search was requested beyond its combinatorial budget."""


@dataclass(frozen=True)
class OracleConfig:
    """Grid search settings.

    max_index=None searches S_1 .. S_n; smaller values restrict the family.
    refine_rounds local passes halve the grid step around the incumbent, so
    the final resolution is grid_step / 2**refine_rounds.
    """

    grid_step: float = 1e-2
    max_index: Optional[int] = None
    refine_rounds: int = 3

    def __post_init__(self) -> None:
        if not (math.isfinite(self.grid_step) and self.grid_step > 0):
            raise ValueError(f"grid_step must be positive, got {self.grid_step!r}")
        if self.max_index is not None and (
            not isinstance(self.max_index, int) or self.max_index < 1
        ):
            raise ValueError(f"max_index must be a positive integer, got {self.max_index!r}")
        if not isinstance(self.refine_rounds, int) or self.refine_rounds < 0:
            raise ValueError(f"refine_rounds must be >= 0, got {self.refine_rounds!r}")


def _grid_distortions(ts: Sequence[int], xs: list[np.ndarray]) -> np.ndarray:
    """Distortion of each candidate tuple; +inf where the candidate is invalid.

    Candidate i places point k at abscissa xs[k][i] on constraint S_{ts[k]}.
    Valid candidates have strictly increasing feet and strictly interior,
    strictly increasing Voronoi breakpoints (anything else leaves some point
    with an empty cell).  Per-cell values use the exact quadratic integral.
    """
    n = len(ts)
    invs = [1.0 / t for t in ts]
    with np.errstate(divide="ignore", invalid="ignore"):
        feet = [2.0 * x + inv for x, inv in zip(xs, invs)]
        valid = np.ones(xs[0].shape, dtype=bool)
        for i in range(n - 1):
            valid &= feet[i] < feet[i + 1]
        # Voronoi cuts between consecutive embedded points, then cells
        # [0, c_0], [c_0, c_1], ..., [c_{n-2}, 1].
        cuts: list[np.ndarray] = []
        for i in range(n - 1):
            a0, a1 = xs[i], xs[i + 1]
            y0, y1 = a0 + invs[i], a1 + invs[i + 1]
            c = (a1 * a1 + y1 * y1 - a0 * a0 - y0 * y0) / (2.0 * (a1 - a0))
            valid &= np.isfinite(c) & (c > 0.0) & (c < 1.0)
            if cuts:
                valid &= cuts[-1] < c
            cuts.append(c)
        zeros = np.zeros(xs[0].shape)
        lows = [zeros] + cuts
        highs = cuts + [np.ones(xs[0].shape)]
        total = np.zeros(xs[0].shape)
        for i in range(n):
            lo, hi, a = lows[i], highs[i], xs[i]
            y = a + invs[i]
            poly = lo * lo + lo * hi + hi * hi - 3.0 * a * (lo + hi) + 3.0 * (a * a + y * y)
            total += (hi - lo) * poly / 3.0
        total = np.where(valid, total, np.inf)
    return total


def _best_on_grids(
    ts: Sequence[int], grids: list[np.ndarray]
) -> Optional[tuple[float, tuple[float, ...]]]:
    """Cheapest valid candidate on the position grids, ties to lower abscissas."""
    mesh = np.meshgrid(*grids, indexing="ij")
    xs = [m.reshape(-1) for m in mesh]
    values = _grid_distortions(ts, xs)
    k = int(np.argmin(values))
    if not math.isfinite(values[k]):
        return None
    return float(values[k]), tuple(float(x[k]) for x in xs)


def brute_force(n: int, config: Optional[OracleConfig] = None) -> qz.SolverOutcome:
    """Exhaustive search for the best n-point quantizer on S_1 .. S_max_index.

    Assignments are scanned in lexicographic order and candidates within a
    grid likewise, so ties break toward lower constraint indices, then lower
    abscissas, and the outcome is deterministic.  iterations counts grid
    passes (1 coarse + refine_rounds); converged is always True.  The
    incumbent's distortion is recomputed through the quantizer module.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > _FULL_SEARCH_MAX_N:
        raise BruteForceLimitError(
            f"exhaustive search supports n <= {_FULL_SEARCH_MAX_N}, got {n}"
        )
    cfg = config if config is not None else OracleConfig()
    max_index = cfg.max_index if cfg.max_index is not None else n
    if max_index > n:
        raise ValueError(
            f"max_index {max_index} exceeds the feasible family size {n}"
        )
    step = cfg.grid_step
    bounds = {}
    coarse = {}
    for j in range(1, max_index + 1):
        lo, hi = feasible_foot_range(j)
        bounds[j] = (lo - step, hi + step)
        coarse[j] = np.arange(lo - step, hi + step + step / 2, step)

    best: Optional[tuple[float, tuple[int, ...], tuple[float, ...]]] = None
    for ts in itertools.product(range(1, max_index + 1), repeat=n):
        found = _best_on_grids(ts, [coarse[t] for t in ts])
        if found is None:
            continue
        value, positions = found
        if best is None or value < best[0]:
            best = (value, ts, positions)
    if best is None:
        raise RuntimeError("no valid candidate on the coarse grid")

    value, ts, positions = best
    for _ in range(cfg.refine_rounds):
        step /= 2
        grids = []
        for t, x in zip(ts, positions):
            lo_w, hi_w = bounds[t]
            local = x + step * np.arange(-2.0, 3.0)
            grids.append(np.unique(np.clip(local, lo_w, hi_w)))
        found = _best_on_grids(ts, grids)
        if found is not None and found[0] < value:
            value, positions = found

    q = qz.Quantizer(tuple(ConstraintPoint(t, x) for t, x in zip(ts, positions)))
    return qz.SolverOutcome(
        quantizer=q,
        distortion=qz.distortion(q),
        iterations=1 + cfg.refine_rounds,
        converged=True,
    )


def riemann_distortion(q: "qz.Quantizer", panels: int = 100_000) -> float:
    """Midpoint-rule integral of the min squared distance to the quantizer.

    Evaluates min_k |(x, 0) - embed(p_k)|^2 at panel midpoints directly; no
    Voronoi partition is involved, making this an independent cross-check of
    distortion().
    """
    if isinstance(panels, bool) or not isinstance(panels, int) or panels < 1:
        raise ValueError(f"panels must be a positive integer, got {panels!r}")
    mids = (np.arange(panels) + 0.5) / panels
    nearest = np.full(panels, np.inf)
    for p in q.points:
        e = embed(p)
        ax, ay = float(e.x), float(e.y)
        np.minimum(nearest, (mids - ax) ** 2 + ay * ay, out=nearest)
    return float(nearest.mean())
