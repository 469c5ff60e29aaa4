"""Fit the constants in C^2 + alpha S^2 = beta, C1^2 + gamma S^2 = delta across y.

Prints the fitted values, the check-grid residual and the drift under a refit
at a second point pair, together with the small-q predictions
beta ~ 4 e^{-y} and delta ~ 1/4.
"""

import argparse
import math

from ramanujan_elliptic import jacobi_fourier as jf


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--ys", type=float, nargs="+", default=[0.5, 1.0, 2.0, 5.0, 10.0, 20.0])
    p.add_argument("--fit", type=float, nargs=2, default=[0.7, 2.1])
    p.add_argument("--refit", type=float, nargs=2, default=[0.4, 1.9])
    args = p.parse_args(argv)

    print(f"{'y':>6} {'alpha':>12} {'beta':>14} {'gamma':>12} {'delta':>12} {'resid':>9} {'drift':>9} {'4e^-y':>12}")
    for y in args.ys:
        ctx = jf.JacobiContext(y)
        fit = jf.fit_pythagorean(ctx, args.fit)
        resid = jf.pythagorean_residual(ctx, fit, jf.real_grid(64))
        drift = jf.refit_stability(ctx, args.fit, args.refit).max_abs_residual
        print(
            f"{y:6g} {fit.alpha:12.9f} {fit.beta:14.8e} {fit.gamma:12.9f} {fit.delta:12.9f} "
            f"{resid:9.1e} {drift:9.1e} {4 * math.exp(-y):12.5e}"
        )


if __name__ == "__main__":
    main()
