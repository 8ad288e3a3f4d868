"""Sweep |f| and |T f| for sampled members against both distortion envelopes.

Writes CSV rows (r, envelope lo/hi, observed min/max) for plotting, and a one-line
summary of violations to stderr.
"""

import argparse
import csv
import sys

import numpy as np

from fracgft.bounds import distortion_function, distortion_operator
from fracgft.classify import ClassParams
from fracgft.fracops import TremblayParams, tremblay
from fracgft.oracle import random_member
from fracgft.series import evaluate


def sweep(p, beta, alpha_op, n_members, n_radii, n_angles, seed):
    rng = np.random.default_rng(seed)
    fs = [random_member(p, rng) for _ in range(n_members)]
    op = TremblayParams(beta, alpha_op)
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    for r in np.linspace(0.0, 0.999, n_radii):
        z = r * np.exp(1j * theta)
        mf = np.concatenate([np.abs(evaluate(f, z)) for f in fs])
        mt = np.concatenate([np.abs(tremblay(f, op).evaluate(z)) for f in fs])
        ef, et = distortion_function(p, float(r)), distortion_operator(p, beta, alpha_op, float(r))
        yield float(r), ef, mf.min(), mf.max(), et, mt.min(), mt.max()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--tau", type=float, default=0.9)
    ap.add_argument("--mu", type=float, default=0.6)
    ap.add_argument("--delta", type=float, default=0.2)
    ap.add_argument("--gamma", type=float, default=0.3)
    ap.add_argument("--beta", type=float, default=0.7)
    ap.add_argument("--alpha-op", type=float, default=0.4)
    ap.add_argument("--members", type=int, default=200)
    ap.add_argument("--radii", type=int, default=41)
    ap.add_argument("--angles", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    p = ClassParams(args.k, args.tau, args.mu, args.delta, args.gamma)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["r", "f_lo", "f_hi", "f_min", "f_max", "t_lo", "t_hi", "t_min", "t_max"])
    bad = 0
    for r, ef, fmin, fmax, et, tmin, tmax in sweep(
        p, args.beta, args.alpha_op, args.members, args.radii, args.angles, args.seed
    ):
        w.writerow([r, ef.lo, ef.hi, fmin, fmax, et.lo, et.hi, tmin, tmax])
        bad += not (ef.contains(fmin, 1e-9) and ef.contains(fmax, 1e-9))
        bad += not (et.contains(tmin, 1e-9) and et.contains(tmax, 1e-9))
    print(f"{args.radii} radii, {bad} envelope breaches", file=sys.stderr)


if __name__ == "__main__":
    main()
