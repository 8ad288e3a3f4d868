"""Seeded verification suites behind ``fracgft verify``.

Each suite returns ``{suite, seed, cases, violations, max_error}``; violations
are data, never exceptions, and are sorted so reports are byte-stable.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .bounds import distortion_function, radius_convex, radius_starlike, radius_term
from .classify import ClassParams, coefficient_functional, extremal, max_coefficient
from .fracops import (
    FracSeries,
    TremblayParams,
    frac_derivative,
    frac_integral,
    tremblay,
    tremblay_by_definition,
)
from .oracle import (
    DiskGrid,
    check_distortion,
    fractional_closed_form,
    min_real_part_functional,
    numeric_radius_convex,
    numeric_radius_starlike,
    quadrature_spot_check,
    random_member,
    random_operator_params,
    random_params,
    real_axis_minimum,
)
from .series import GapSeries, evaluate

SUITES = ("membership", "radius", "distortion", "fracops")


def _report(suite: str, seed: int, cases: int, violations: list, max_error: float) -> dict:
    violations = sorted(violations, key=lambda v: repr(sorted(v.items())))
    return {"suite": suite, "seed": seed, "cases": cases, "violations": violations, "max_error": max_error}


def radius_parameter_grid() -> list[tuple[ClassParams, float]]:
    """54 (params, α) combinations spanning every parameter axis."""
    out = []
    pairs = [(1.0, 1.0), (0.8, 0.5), (0.5, 0.5)]
    for (tau, mu), delta, gamma, alpha in itertools.product(pairs, (0.0, 0.5, 0.9), (0.0, 0.3, 0.6), (0.0, 0.5)):
        k = 1 + (len(out) % 3)
        out.append((ClassParams(k, tau, mu, delta, gamma), alpha))
    return out


def membership_suite(seed: int, n: int = 50) -> dict:
    rng = np.random.default_rng(seed)
    violations, max_error, cases = [], 0.0, 0
    grid = DiskGrid(64, 64, 0.999)
    for i in range(n):
        p = random_params(rng)
        f = random_member(p, rng)
        low = min_real_part_functional(f, p, grid)
        if low <= p.gamma - 1e-7:
            violations.append({"check": "forward", "case": i, "params": p.to_dict(), "series": f.to_dict(), "min": low})
        nu = int(rng.integers(p.k + 1, p.k + 33))
        witness = GapSeries(p.k, {nu: 1.05 * max_coefficient(p, nu)})
        value, z = real_axis_minimum(witness, p)
        if not value < p.gamma:
            violations.append({"check": "reverse", "case": i, "params": p.to_dict(), "nu": nu, "min": value, "z": z})
        err = abs(coefficient_functional(extremal(p), p) - (1.0 - p.gamma))
        max_error = max(max_error, err)
        if err > 1e-10:
            violations.append({"check": "sharpness", "case": i, "params": p.to_dict(), "error": err})
        cases += 3
    return _report("membership", seed, cases, violations, max_error)


def radius_suite(seed: int) -> dict:
    violations, max_error, cases = [], 0.0, 0
    for p, alpha in radius_parameter_grid():
        for kind, analytic, numeric in (
            ("starlike", radius_starlike, numeric_radius_starlike),
            ("convex", radius_convex, numeric_radius_convex),
        ):
            for nu in (p.k + 1, p.k + 2, p.k + 5):
                f = GapSeries(p.k, {nu: max_coefficient(p, nu)})
                expected = min(radius_term(p, alpha, nu, kind), 1.0)
                got = numeric(f, alpha, 1e-7)
                err = abs(got - expected)
                max_error = max(max_error, err)
                cases += 1
                if err > 1e-6:
                    violations.append(
                        {"kind": kind, "params": p.to_dict(), "alpha": alpha, "nu": nu, "numeric": got, "analytic": expected}
                    )
        if radius_convex(p, alpha).r > radius_starlike(p, alpha).r:
            violations.append({"kind": "ordering", "params": p.to_dict(), "alpha": alpha})
    return _report("radius", seed, cases, violations, max_error)


def distortion_suite(seed: int, n_params: int = 10, n_members: int = 20) -> dict:
    rng = np.random.default_rng(seed)
    violations, max_error, cases = [], 0.0, 0
    for i in range(n_params):
        p = random_params(rng)
        beta, alpha_op = random_operator_params(rng)
        rep = check_distortion(p, beta, alpha_op, n_members, seed=seed + i)
        cases += rep.cases
        max_error = max(max_error, rep.max_error)
        for v in rep.violations:
            violations.append({"params": p.to_dict(), "beta": beta, "alpha_op": alpha_op, **v})
        r = float(rng.uniform(0.0, 0.999))
        edge = abs(abs(evaluate(extremal(p), r)) - distortion_function(p, r).lo)
        max_error = max(max_error, edge)
        cases += 1
        if edge > 1e-10:
            violations.append({"check": "attainment", "params": p.to_dict(), "r": r, "error": edge})
    return _report("distortion", seed, cases, violations, max_error)


def fracops_suite(seed: int, n: int = 20) -> dict:
    rng = np.random.default_rng(seed)
    violations, max_error, cases = [], 0.0, 0
    for i in range(n):
        p_exp = float(rng.choice([0.0, 1.0, 2.0, 3.0, float(rng.uniform(0, 4))]))
        sigma = float(rng.uniform(0.05, 0.95))
        x = float(rng.uniform(0.05, 0.95))
        exact = fractional_closed_form(p_exp, sigma, x)
        rel = abs(quadrature_spot_check(p_exp, sigma, x) - exact) / abs(exact)
        max_error = max(max_error, rel)
        if rel > 1e-5:
            violations.append({"check": "quadrature", "p": p_exp, "sigma": sigma, "x": x, "rel_error": rel})
        s = FracSeries.monomial(p_exp, 1.0)
        back = frac_derivative(frac_integral(s, sigma), sigma)
        if not back.isclose(s, rel=1e-12):
            violations.append({"check": "round_trip", "p": p_exp, "sigma": sigma})
        cp = random_params(rng)
        f = random_member(cp, rng)
        tp = TremblayParams(cp.tau, cp.mu)
        direct = tremblay(f, tp)
        composed = dict(tremblay_by_definition(f, tp).terms)
        lead_err = abs(composed.pop(1.0) - direct.head) / direct.head
        term_err = max(
            (abs(-composed[float(nu)] - c) / c for nu, c in direct.terms.items() if c > 0), default=0.0
        )
        max_error = max(max_error, lead_err, term_err)
        if max(lead_err, term_err) > 1e-11:
            violations.append({"check": "tremblay", "case": i, "params": cp.to_dict(), "rel_error": max(lead_err, term_err)})
        cases += 3
    return _report("fracops", seed, cases, violations, max_error)


_RUNNERS = {
    "membership": membership_suite,
    "radius": radius_suite,
    "distortion": distortion_suite,
    "fracops": fracops_suite,
}


def run_suite(suite: str, seed: int = 0) -> dict:
    if suite == "all":
        parts = [_RUNNERS[name](seed) for name in SUITES]
        violations = [{"suite": r["suite"], **v} for r in parts for v in r["violations"]]
        return _report(
            "all", seed, sum(r["cases"] for r in parts), violations, max(r["max_error"] for r in parts)
        )
    return _RUNNERS[suite](seed)


def is_clean(report: dict) -> bool:
    return not report["violations"] and math.isfinite(report["max_error"])
