"""
Fixed-point iteration: watching the Lloyd sweeps contract
=========================================================

One sweep repartitions the support at the bisector breakpoints and moves
each point under its cell's barycenter.  In foot coordinates this is the
textbook one-dimensional Lloyd map for the uniform density, a contraction
with rate cos^2(pi / (2n)), so the foot error shrinks geometrically and
slower for larger n.  The demo measures that rate empirically.
"""

import math

from segquant import SolverConfig, solve_fixed_constraint, vn


def sweeps_needed(n: int, tol: float) -> int:
    out = solve_fixed_constraint(n, n, SolverConfig(tol=tol, max_iter=100_000))
    assert out.converged
    return out.iterations


def main() -> None:
    print("sweeps until the max foot movement drops below tol:")
    print(f"{'n':>4} {'tol=1e-6':>10} {'tol=1e-9':>10} {'tol=1e-12':>11} {'rate':>9} {'cos^2':>9}")
    for n in (2, 4, 8, 16, 32):
        s6 = sweeps_needed(n, 1e-6)
        s9 = sweeps_needed(n, 1e-9)
        s12 = sweeps_needed(n, 1e-12)
        # movement shrinks by the contraction factor each sweep, so the
        # extra sweeps per decade of tolerance estimate the rate
        rate = 10 ** (-3 / ((s12 - s6) / 2)) if s12 > s6 else float("nan")
        predicted = math.cos(math.pi / (2 * n)) ** 2
        print(f"{n:>4} {s6:>10} {s9:>10} {s12:>11} {rate:>9.5f} {predicted:>9.5f}")
    print()

    print("achieved error vs the closed form (tol = 1e-12):")
    for n in (1, 5, 25, 64):
        out = solve_fixed_constraint(n, n)
        print(
            f"  n = {n:>3}: solver {out.distortion:.15f}  closed form {vn(n):.15f}"
            f"  gap {abs(out.distortion - vn(n)):.1e}  ({out.iterations} sweeps)"
        )
    print()

    # the constraint index only shifts the abscissas; the feet, partition,
    # and error of the solution on S_t are independent of t
    print("solving 4 points on different constraints S_t:")
    for t in (1, 2, 4, 16):
        out = solve_fixed_constraint(4, t)
        feet = ", ".join(f"{f:.6f}" for f in out.quantizer.feet())
        print(f"  t = {t:>2}: feet {feet}  distortion {out.distortion:.12f}")
    print("(higher t always wins on distortion; t = n is the feasible best)")


if __name__ == "__main__":
    main()
