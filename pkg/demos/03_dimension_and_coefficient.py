"""
Error asymptotics: dimension 2 and coefficient 1/2
==================================================

The excess error e(n) = V_n - 1/6 equals (12 n + 13) / (24 n^2), so it
decays like 1/(2n).  Two standard diagnostics recover the asymptotics:
the direct ratio 2 log n / (-log e(n)) creeps toward the dimension 2, and
a log-log regression of e(n) over a geometric grid of n nails the slope -1
(hence dimension 2 / |slope| = 2) much faster.  The scaled excess
n * e(n) = 1/2 + 13/(24 n) falls monotonically to the coefficient 1/2.
"""

from segquant import (
    coefficient_estimate,
    dimension_direct,
    dimension_regression,
    excess,
)


def main() -> None:
    print("excess and the direct dimension estimate:")
    print(f"{'n':>9} {'excess':>12} {'2 log n / -log e(n)':>21}")
    for k in range(1, 8):
        n = 10**k
        print(f"{n:>9} {excess(n):>12.3e} {dimension_direct(n):>21.6f}")
    print("  (the direct estimate converges only logarithmically)")
    print()

    print("log-log regression over geometric windows [n_min, n_max]:")
    for lo, hi in ((2, 2**6), (2**6, 2**14), (2**14, 2**22)):
        est = dimension_regression(lo, hi, 9)
        print(
            f"  [{lo:>7}, {hi:>8}]: slope {est.slope:+.6f}  "
            f"dimension {est.dimension:.6f}  residual {est.residual:.2e}"
        )
    print("  (windows of larger n flatten the 13/(24 n^2) correction away)")
    print()

    print("scaled excess n * e(n) marching down to 1/2:")
    for k in range(0, 7):
        n = 10**k
        c = coefficient_estimate(n)
        print(f"  n = {n:>8}: {c:.10f}  (gap to 1/2: {c - 0.5:.3e})")


if __name__ == "__main__":
    main()
