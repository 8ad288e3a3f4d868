"""Print analytic vs numeric starlikeness/convexity radii over a parameter grid.

For each setting the numeric column is the bisection radius of the single-term
function that attains the analytic infimum.
"""

import argparse
import csv
import itertools
import sys

from fracgft.bounds import radius_convex, radius_starlike
from fracgft.classify import ClassParams, max_coefficient
from fracgft.oracle import numeric_radius_convex, numeric_radius_starlike
from fracgft.series import GapSeries


def rows(ks, gammas, deltas, alphas, tau, mu):
    for k, gamma, delta, alpha in itertools.product(ks, gammas, deltas, alphas):
        p = ClassParams(k, tau, mu, delta, gamma, allow_delta_one=True)
        for kind, analytic, numeric in (
            ("starlike", radius_starlike, numeric_radius_starlike),
            ("convex", radius_convex, numeric_radius_convex),
        ):
            res = analytic(p, alpha)
            nu = res.nu_star or p.k + 1
            check = numeric(GapSeries(k, {nu: max_coefficient(p, nu)}), alpha)
            yield [k, tau, mu, delta, gamma, alpha, kind, res.r, res.nu_star, res.capped, check]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tau", type=float, default=0.8)
    ap.add_argument("--mu", type=float, default=0.5)
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--gamma", type=float, nargs="+", default=[0.0, 0.3, 0.6])
    ap.add_argument("--delta", type=float, nargs="+", default=[0.0, 0.5, 1.0])
    ap.add_argument("--alpha", type=float, nargs="+", default=[0.0, 0.5])
    args = ap.parse_args(argv)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["k", "tau", "mu", "delta", "gamma", "alpha", "kind", "r", "nu_star", "capped", "numeric"])
    for row in rows(args.k, args.gamma, args.delta, args.alpha, args.tau, args.mu):
        w.writerow(row)


if __name__ == "__main__":
    main()
