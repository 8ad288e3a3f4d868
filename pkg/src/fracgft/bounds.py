"""Distortion envelopes and radii of starlikeness/convexity for class members."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .classify import ClassParams, extremal_coefficient
from .errors import DomainError
from .fracops import TremblayParams
from .special_fn import phi_ratio_array, pochhammer

DEFAULT_SCAN_LIMIT = 10_000
PLATEAU_RUN = 64
_CHUNK = 512


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise DomainError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack


@dataclass(frozen=True)
class RadiusResult:
    r: float
    nu_star: int
    capped: bool


def _check_radius(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r!r}", "r")


def distortion_function(p: ClassParams, r: float) -> Interval:
    """Envelope r ∓ C r^{k+1} for |f(z)| on |z| = r."""
    _check_radius(r)
    c = extremal_coefficient(p)
    spread = c * r ** (p.k + 1)
    return Interval(max(r - spread, 0.0), r + spread)


def operator_constant(p: ClassParams, beta: float, alpha_op: float) -> float:
    """(1-γ)(β+1)_k(μ+1)_k / ((1+δk)(α+1)_k(τ+1)_k)."""
    return extremal_coefficient(p) * pochhammer(beta + 1, p.k) / pochhammer(alpha_op + 1, p.k)


def distortion_operator(p: ClassParams, beta: float, alpha_op: float, r: float) -> Interval:
    """Envelope (β/α) r (1 ∓ r^k C') for |T^{β,α} f(z)| on |z| = r; lo clamped at 0."""
    TremblayParams(beta, alpha_op)
    _check_radius(r)
    c = operator_constant(p, beta, alpha_op)
    scale = beta / alpha_op * r
    spread = r**p.k * c
    return Interval(max(scale * (1.0 - spread), 0.0), scale * (1.0 + spread))


def radius_terms(p: ClassParams, alpha: float, nus, kind: str = "starlike") -> np.ndarray:
    """t(ν)^{1/(ν-1)}, t(ν) = (1-α)(1+δν-δ)Φ(ν) / ((ν-α)(1-γ)), divided by ν for convexity."""
    nus = np.asarray(nus, dtype=float)
    t = (1.0 - alpha) * (1.0 + p.delta * nus - p.delta) * phi_ratio_array(nus, p.tau, p.mu)
    t /= (nus - alpha) * (1.0 - p.gamma)
    if kind == "convex":
        t /= nus
    return np.exp(np.log(t) / (nus - 1.0))


def radius_term(p: ClassParams, alpha: float, nu: int, kind: str = "starlike") -> float:
    return float(radius_terms(p, alpha, [nu], kind)[0])


def scan_limit() -> int:
    raw = os.environ.get("GFT_SCAN_LIMIT")
    if raw is None:
        return DEFAULT_SCAN_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"GFT_SCAN_LIMIT must be an integer, got {raw!r}", "GFT_SCAN_LIMIT") from None
    if value < 2:
        raise DomainError("GFT_SCAN_LIMIT must be >= 2", "GFT_SCAN_LIMIT")
    return value


def _radius(p: ClassParams, alpha: float, kind: str, n_scan: int | None) -> RadiusResult:
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}", "alpha")
    if kind not in ("starlike", "convex"):
        raise DomainError(f"kind must be 'starlike' or 'convex', got {kind!r}", "kind")
    limit = max(n_scan if n_scan is not None else scan_limit(), p.k + 1)
    best, best_nu, run = math.inf, 0, 0
    for start in range(p.k + 1, limit + 1, _CHUNK):
        nus = range(start, min(start + _CHUNK, limit + 1))
        for nu, term in zip(nus, radius_terms(p, alpha, nus, kind).tolist()):
            if term < best:
                best, best_nu, run = term, nu, 0
            elif term > best and term > 1.0:
                # t(ν) > 1 exactly when its root exceeds 1
                run += 1
                if run >= PLATEAU_RUN:
                    break
            else:
                run = 0
        if run >= PLATEAU_RUN:
            break
    if best >= 1.0:
        return RadiusResult(1.0, 0, True)
    return RadiusResult(best, best_nu, False)


def radius_starlike(p: ClassParams, alpha: float, n_scan: int | None = None) -> RadiusResult:
    return _radius(p, alpha, "starlike", n_scan)


def radius_convex(p: ClassParams, alpha: float, n_scan: int | None = None) -> RadiusResult:
    return _radius(p, alpha, "convex", n_scan)
