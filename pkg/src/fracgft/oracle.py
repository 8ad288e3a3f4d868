"""Independent numerical checks of the analytic results on the unit disk.

Nothing here reuses the closed-form bounds it is checking: membership is
probed by sampling the real-part condition on a disk grid, radii by bisection
on the starlikeness/convexity functionals, distortion by direct evaluation,
and the fractional derivative by quadrature of its defining integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .bounds import distortion_function, distortion_operator
from .classify import ClassParams, class_weights, coefficient_functional, extremal
from .errors import DomainError, QuadratureError
from .fracops import TremblayParams, tremblay, tremblay_derivative
from .series import (
    GapSeries,
    evaluate,
    evaluate_derivative,
    evaluate_second_derivative,
    horner,
)
from .special_fn import log_gamma, log_gamma_ratio, phi_ratio

ENVELOPE_SLACK = 1e-9


@dataclass(frozen=True)
class DiskGrid:
    n_radial: int = 128
    n_angular: int = 128
    r_max: float = 0.999

    def __post_init__(self):
        if self.n_radial < 2 or self.n_angular < 8:
            raise DomainError("grid needs n_radial >= 2 and n_angular >= 8", "grid")
        if not 0.0 < self.r_max < 1.0:
            raise DomainError(f"r_max must lie in (0, 1), got {self.r_max!r}", "r_max")

    def points(self) -> np.ndarray:
        radii = self.r_max * np.arange(1, self.n_radial + 1) / self.n_radial
        theta = 2 * np.pi * np.arange(self.n_angular) / self.n_angular
        if self.n_angular % 2:
            theta = np.append(theta, np.pi)
        return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()

    def refined(self) -> "DiskGrid":
        """A grid containing every point of this one."""
        return DiskGrid(2 * self.n_radial, 2 * self.n_angular, self.r_max)


# -- membership -------------------------------------------------------------


def functional_series(f: GapSeries, p: ClassParams, z):
    """1 - Σ (1+δν-δ)Φ(ν) a_ν z^{ν-1}; finite at z = 0."""
    zz = np.asarray(z, dtype=complex)
    w = class_weights(p, f.indices()) * f.dense()
    return 1.0 - zz**f.k * horner(w, zz)


def functional_direct(f: GapSeries, p: ClassParams, z):
    """Γ(μ+1)Γ(τ)/(Γ(τ+1)Γ(μ)) z^{-1}[(1-δ)Tf + δ z (Tf)'] evaluated from the operator images."""
    zz = np.asarray(z, dtype=complex)
    tp = TremblayParams(p.tau, p.mu)
    pref = math.exp(
        log_gamma(p.mu + 1) + log_gamma(p.tau) - log_gamma(p.tau + 1) - log_gamma(p.mu)
    )
    tf = tremblay(f, tp).evaluate(zz)
    dtf = tremblay_derivative(f, tp).evaluate(zz)
    return pref * ((1.0 - p.delta) * tf + p.delta * zz * dtf) / zz


def min_real_part_functional(f: GapSeries, p: ClassParams, grid: DiskGrid | None = None) -> float:
    grid = grid or DiskGrid()
    return float(np.min(functional_series(f, p, grid.points()).real))


def real_axis_minimum(f: GapSeries, p: ClassParams, r_from: float = 0.999, r_to: float = 0.9999, n: int = 91):
    """Smallest real part of the class functional over real z with r_from ≤ |z| ≤ r_to."""
    r = np.linspace(r_from, r_to, n)
    z = np.concatenate([-r, r])
    vals = functional_series(f, p, z).real
    i = int(np.argmin(vals))
    return float(vals[i]), float(z[i].real)


# -- starlikeness / convexity radii ----------------------------------------


def starlike_functional(f: GapSeries, z):
    """z f'(z) / f(z)."""
    zz = np.asarray(z, dtype=complex)
    return zz * evaluate_derivative(f, zz) / evaluate(f, zz)


def convex_functional(f: GapSeries, z):
    """1 + z f''(z) / f'(z)."""
    zz = np.asarray(z, dtype=complex)
    return 1.0 + zz * evaluate_second_derivative(f, zz) / evaluate_derivative(f, zz)


_FUNCTIONALS = {"starlike": starlike_functional, "convex": convex_functional}


def circle_min(f: GapSeries, r: float, kind: str, n_angles: int = 1024, zooms: int = 3) -> float:
    """min over |z| = r of the real part of the chosen functional.

    A uniform angular scan (always including θ = 0) is followed by a few
    rounds of dense resampling around the running argmin.
    """
    func = _FUNCTIONALS[kind]
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    step = 2 * np.pi / n_angles
    best = math.inf
    for _ in range(zooms + 1):
        with np.errstate(all="ignore"):
            vals = func(f, r * np.exp(1j * theta)).real
        if not np.all(np.isfinite(vals)):
            return -math.inf
        j = int(np.argmin(vals))
        best = min(best, float(vals[j]))
        theta = theta[j] + np.linspace(-step, step, 33)
        step /= 16
    return best


def first_zero_modulus(f: GapSeries, kind: str) -> float:
    """Smallest |z| > 0 where f(z)/z (starlike) or f'(z) (convex) vanishes; inf if none."""
    nu = f.indices()
    scale = nu if kind == "convex" else np.ones_like(nu)
    # 1 - Σ c_ν z^{ν-1}, highest power first for np.roots
    poly = np.zeros(f.N)
    poly[0] = 1.0
    poly[nu - 1] = -scale * f.dense()
    roots = np.roots(poly[::-1])
    return float(np.min(np.abs(roots))) if roots.size else math.inf


def _numeric_radius(f: GapSeries, alpha: float, tol: float, kind: str) -> float:
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}", "alpha")
    if not any(a > 0 for a in f.coeffs.values()):
        return 1.0

    def ok(r):
        return circle_min(f, r, kind) >= alpha

    # beyond the first zero of f(z)/z (resp. f') the functional has poles and
    # its circle minimum is no longer monotone in r
    limit = first_zero_modulus(f, kind)
    hi = min(1.0 - tol, limit * (1.0 - 1e-12))
    if limit >= 1.0 and ok(hi):
        return 1.0
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def numeric_radius_starlike(f: GapSeries, alpha: float = 0.0, tol: float = 1e-7) -> float:
    """Largest r with Re(z f'/f) ≥ α on |z| = r, by bisection (1.0 if never violated)."""
    return _numeric_radius(f, alpha, tol, "starlike")


def numeric_radius_convex(f: GapSeries, alpha: float = 0.0, tol: float = 1e-7) -> float:
    """Largest r with Re(1 + z f''/f') ≥ α on |z| = r, by bisection."""
    return _numeric_radius(f, alpha, tol, "convex")


# -- random sampling --------------------------------------------------------


def random_params(rng: np.random.Generator, k_max: int = 6) -> ClassParams:
    mu = float(rng.uniform(0.01, 1.0))
    tau = float(rng.uniform(mu, 1.0))
    gamma = float(rng.uniform(0.0, 1.0 - (tau - mu)) * 0.999)
    delta = float(rng.uniform(0.0, 0.999))
    return ClassParams(int(rng.integers(1, k_max + 1)), tau, mu, delta, gamma)


def random_operator_params(rng: np.random.Generator) -> tuple[float, float]:
    """(β, α_op) with 0 < α_op ≤ β ≤ 1."""
    alpha_op = float(rng.uniform(0.01, 1.0))
    return float(rng.uniform(alpha_op, 1.0)), alpha_op


def random_member(p: ClassParams, rng: np.random.Generator, fill: float | None = None) -> GapSeries:
    """1-8 indices in [k+1, k+32], exponential magnitudes, functional rescaled to u(1-γ)."""
    count = int(rng.integers(1, 9))
    nus = rng.choice(np.arange(p.k + 1, p.k + 33), size=count, replace=False)
    mags = rng.exponential(1.0, size=count)
    raw = GapSeries(p.k, {int(nu): float(m) for nu, m in zip(nus, mags)})
    u = float(rng.uniform()) if fill is None else fill
    scale = u * (1.0 - p.gamma) / coefficient_functional(raw, p)
    return GapSeries(p.k, {nu: a * scale for nu, a in raw.coeffs.items()})


# -- distortion -------------------------------------------------------------


@dataclass
class DistortionReport:
    seed: int
    beta: float
    alpha_op: float
    cases: int = 0
    violations: list[dict] = field(default_factory=list)
    max_error: float = 0.0


def check_distortion(
    p: ClassParams,
    beta: float,
    alpha_op: float,
    n_samples: int,
    n_radii: int = 64,
    n_angles: int = 64,
    seed: int = 0,
) -> DistortionReport:
    """Sample members and check |f| and |T^{β,α} f| against both envelopes."""
    rng = np.random.default_rng(seed)
    op = TremblayParams(beta, alpha_op)
    report = DistortionReport(seed, beta, alpha_op)
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    radii = np.sort(rng.uniform(0.0, 0.999, n_radii))
    env_f = [distortion_function(p, float(r)) for r in radii]
    env_t = [distortion_operator(p, beta, alpha_op, float(r)) for r in radii]
    lo_f, hi_f = np.array([e.lo for e in env_f]), np.array([e.hi for e in env_f])
    lo_t, hi_t = np.array([e.lo for e in env_t]), np.array([e.hi for e in env_t])
    z = radii[:, None] * np.exp(1j * theta)[None, :]
    for i in range(n_samples):
        f = random_member(p, rng)
        for name, mod, lo, hi in (
            ("function", np.abs(evaluate(f, z)), lo_f, hi_f),
            ("operator", np.abs(tremblay(f, op).evaluate(z)), lo_t, hi_t),
        ):
            excess = np.maximum(lo[:, None] - mod, mod - hi[:, None])
            report.max_error = max(report.max_error, float(max(excess.max(), 0.0)))
            bad = np.argwhere(excess > ENVELOPE_SLACK)
            if bad.size:
                a, b = bad[np.argmax(excess[tuple(bad.T)])]
                report.violations.append(
                    {
                        "envelope": name,
                        "sample": i,
                        "series": f.to_dict(),
                        "z": [float(z[a, b].real), float(z[a, b].imag)],
                        "modulus": float(mod[a, b]),
                        "lo": float(lo[a]),
                        "hi": float(hi[a]),
                        "count": int(len(bad)),
                    }
                )
        report.cases += 1
    report.violations.sort(key=lambda v: (v["sample"], v["envelope"]))
    return report


# -- fractional derivative by quadrature -----------------------------------


def _singular_integral(p: float, sigma: float, x: float) -> float:
    # ∫_0^x ζ^p (x-ζ)^{-σ} dζ with ζ = x(1 - u^{1/(1-σ)}); the Jacobian cancels the singularity
    expo = 1.0 / (1.0 - sigma)
    val, err = integrate.quad(
        lambda u: (x * (1.0 - u**expo)) ** p, 0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200
    )
    if not math.isfinite(val) or err > 1e-10 * max(abs(val), 1e-300):
        raise QuadratureError(f"quadrature did not converge (p={p}, sigma={sigma}, x={x}, err={err:.2e})")
    return val * x ** (1.0 - sigma) / (1.0 - sigma)


def quadrature_spot_check(p_exponent: float, sigma: float, x: float, h: float = 1e-5) -> float:
    """(1/Γ(1-σ)) d/dx ∫_0^x ζ^p (x-ζ)^{-σ} dζ on the positive real axis, central difference in x."""
    if p_exponent < 0 or not 0.0 < sigma < 1.0 or not 0.0 < x < 1.0:
        raise DomainError("need p >= 0, 0 < sigma < 1, 0 < x < 1")
    h = min(h, 0.5 * x)
    deriv = (_singular_integral(p_exponent, sigma, x + h) - _singular_integral(p_exponent, sigma, x - h)) / (2 * h)
    return deriv / math.exp(log_gamma(1.0 - sigma))


# -- monotonicity surveys ---------------------------------------------------


def omega_violations(beta: float, alpha_op: float, nu_max: int = 1000, k: int = 1, rel: float = 1e-13) -> list[dict]:
    """Indices where ω(ν) = (β+1)_{ν-1}/(α+1)_{ν-1} increases."""
    nus = range(k + 1, nu_max + 1)
    w = np.array([phi_ratio(nu, beta, alpha_op) for nu in nus])
    jumps = np.diff(w) > rel * w[:-1]
    return [
        {"nu": int(k + 1 + i), "omega": float(w[i]), "omega_next": float(w[i + 1])}
        for i in np.flatnonzero(jumps)
    ]


def xi_violations(p: ClassParams, nu_max: int = 1000, rel: float = 1e-13) -> list[dict]:
    """Indices where Ξ(ν) = 1 - (1-γ)²/((1+δν-δ)Φ(ν)) decreases."""
    nus = np.arange(p.k + 1, nu_max + 1)
    xi = 1.0 - (1.0 - p.gamma) ** 2 / class_weights(p, nus)
    drops = np.diff(xi) < -rel * np.maximum(np.abs(xi[:-1]), 1e-300)
    return [
        {"nu": int(nus[i]), "xi": float(xi[i]), "xi_next": float(xi[i + 1])} for i in np.flatnonzero(drops)
    ]


def fractional_closed_form(p_exponent: float, sigma: float, x: float) -> float:
    return math.exp(log_gamma_ratio(p_exponent + 1, p_exponent + 1 - sigma)) * x ** (p_exponent - sigma)


def extremal_grid_minimum(p: ClassParams, grid: DiskGrid | None = None) -> tuple[float, complex]:
    grid = grid or DiskGrid()
    pts = grid.points()
    vals = functional_series(extremal(p), p, pts).real
    i = int(np.argmin(vals))
    return float(vals[i]), complex(pts[i])
