"""Survey ω(ν) and Ξ(ν) for monotonicity up to a cutoff, including β > α_op.

ω(ν) = (β+1)_{ν-1}/(α+1)_{ν-1} drives the operator distortion bound and is only
non-increasing when β ≤ α_op; the survey reports where it turns, and shows a
member whose operator image escapes the upper envelope when it does.
"""

import argparse
import json

import numpy as np

from fracgft.bounds import distortion_operator
from fracgft.classify import ClassParams, max_coefficient
from fracgft.fracops import TremblayParams, tremblay
from fracgft.oracle import omega_violations, random_params, xi_violations
from fracgft.series import GapSeries


def escape_witness(beta, alpha_op, nu=10, r=0.99):
    p = ClassParams(1, 1.0, 1.0, 0.0, 0.0)
    f = GapSeries(1, {nu: max_coefficient(p, nu)})
    thetas = np.linspace(0, 2 * np.pi, 256, endpoint=False)
    mod = np.abs(tremblay(f, TremblayParams(beta, alpha_op)).evaluate(r * np.exp(1j * thetas)))
    return {"nu": nu, "r": r, "max_modulus": float(mod.max()), "hi": distortion_operator(p, beta, alpha_op, r).hi}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sets", type=int, default=50)
    ap.add_argument("--nu-max", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    below, above, xi = 0, [], 0
    for _ in range(args.sets):
        a, b = sorted(rng.uniform(0.01, 1.0, 2))
        below += len(omega_violations(a, b, args.nu_max))
        turns = omega_violations(b, a, args.nu_max)
        if turns:
            above.append({"beta": b, "alpha_op": a, "first_increase": turns[0]["nu"]})
        xi += len(xi_violations(random_params(rng), args.nu_max))
    report = {
        "omega_beta_le_alpha_violations": below,
        "omega_beta_gt_alpha_sets_increasing": len(above),
        "omega_beta_gt_alpha_examples": above[:3],
        "xi_violations": xi,
        "escape_witness": escape_witness(1.0, 0.5),
    }
    print(json.dumps(report, indent=2))


if __name__ == "__main__":
    main()
