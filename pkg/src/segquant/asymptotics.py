"""Estimating the quantization dimension and coefficient from the errors.

The excess e(n) = V_n - V_inf decays like 1 / (2n), so on a log-log plot the
error curve is asymptotically a line of slope -1 and the two standard
estimators both converge to dimension 2:

  * the direct ratio 2 log n / (-log e(n)), evaluated at a single n, and
  * 2 / |slope| for the least-squares slope of log e(n) against log n over a
    geometric grid of sample sizes.

Excess values come from the exact rational closed form, so no cancellation
occurs even at n ~ 1e8; logarithms are taken after the single conversion to
float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import closed_form


def excess(n: int) -> float:
    """Error excess V_n - V_inf, exact rational converted to float."""
    return float(closed_form.excess_exact(n))


def coefficient_estimate(n: int) -> float:
    """Scaled excess n * (V_n - V_inf) = 1/2 + 13/(24 n).

    Strictly decreasing in n with limit the quantization coefficient 1/2.
    """
    return float(n * closed_form.excess_exact(n))


def dimension_direct(n: int) -> float:
    """Single-point dimension estimate 2 log n / (-log excess(n)).

    Needs n >= 2 and excess(n) < 1 so that the denominator is positive; at
    n = 1 the excess is 25/24 > 1 and the estimate is undefined.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"direct estimate needs an integer n >= 2, got {n!r}")
    e = excess(n)
    if e >= 1:
        raise ValueError(f"direct estimate needs excess < 1, got {e!r} at n={n}")
    return 2 * math.log(n) / -math.log(e)


def fit_log_log(
    ns: Sequence[int], values: Sequence[float]
) -> tuple[float, float, float]:
    """Least-squares line through (log n, log value); slope, intercept, residual.

    residual is the max absolute deviation of the data from the fitted line
    in log space.  Plain scalar arithmetic keeps the result bit-reproducible.
    """
    if len(ns) != len(values) or len(ns) < 2:
        raise ValueError("need at least two (n, value) pairs")
    xs = [math.log(n) for n in ns]
    ys = [math.log(v) for v in values]
    k = len(xs)
    mean_x = sum(xs) / k
    mean_y = sum(ys) / k
    sxx = sum((x - mean_x) ** 2 for x in xs)
    if sxx == 0:
        raise ValueError("degenerate sample set: all n equal")
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = mean_y - slope * mean_x
    residual = max(abs(y - (intercept + slope * x)) for x, y in zip(xs, ys))
    return slope, intercept, residual


@dataclass(frozen=True)
class RegressionEstimate:
    """Log-log fit of the excess curve and the dimension 2 / |slope|."""

    slope: float
    intercept: float
    dimension: float
    sample_range: tuple[int, int]
    residual: float


def _geometric_samples(n_min: int, n_max: int, samples: int) -> list[int]:
    log_lo, log_hi = math.log(n_min), math.log(n_max)
    raw = [
        round(math.exp(log_lo + (log_hi - log_lo) * i / (samples - 1)))
        for i in range(samples)
    ]
    distinct = sorted(set(raw))
    if len(distinct) < 2:
        raise ValueError(f"degenerate sample set {raw!r}")
    return distinct


def dimension_regression(
    n_min: int, n_max: int, samples: int = 9
) -> RegressionEstimate:
    """Dimension estimate from a log-log fit of excess over geometric samples.

    Takes `samples` geometrically spaced integers in [n_min, n_max]
    (deduplicated after rounding) and fits log excess against log n.
    """
    for label, v in (("n_min", n_min), ("n_max", n_max)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise ValueError(f"{label} must be an integer >= 2, got {v!r}")
    if not n_min < n_max:
        raise ValueError(f"need n_min < n_max, got {n_min} >= {n_max}")
    if not isinstance(samples, int) or samples < 2:
        raise ValueError(f"samples must be an integer >= 2, got {samples!r}")
    ns = _geometric_samples(n_min, n_max, samples)
    slope, intercept, residual = fit_log_log(ns, [excess(n) for n in ns])
    if slope == 0:
        raise ValueError("excess curve fit has zero slope")
    return RegressionEstimate(
        slope=slope,
        intercept=intercept,
        dimension=2 / abs(slope),
        sample_range=(n_min, n_max),
        residual=residual,
    )
