"""Fractional integral/derivative and the Tremblay operator as exact coefficient maps.

On a monomial z^p the fractional integral of order σ is
Γ(p+1)/Γ(p+1+σ) z^{p+σ} and the fractional derivative is
Γ(p+1)/Γ(p+1-σ) z^{p-σ}; everything here is built from those two maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import DomainError
from .series import GapSeries
from .special_fn import log_gamma_ratio, phi_ratio

_SNAP = 1e-12


def _snap(p: float) -> float:
    r = round(p)
    return float(r) if abs(p - r) <= _SNAP else p


@dataclass(frozen=True)
class FracSeries:
    """Σ c_p z^p with real, distinct, non-negative exponents."""

    terms: Mapping[float, float] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[float, float] = {}
        for p, c in self.terms.items():
            p = _snap(float(p))
            if p < 0:
                raise DomainError(f"exponent {p!r} is negative", "exponent")
            clean[p] = clean.get(p, 0.0) + float(c)
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def monomial(cls, p: float, c: float = 1.0) -> "FracSeries":
        return cls({p: c})

    @classmethod
    def from_gap(cls, f: GapSeries) -> "FracSeries":
        terms = {1.0: 1.0}
        terms.update({float(nu): -a for nu, a in f.coeffs.items()})
        return cls(terms)

    def scale(self, factor: float) -> "FracSeries":
        return FracSeries({p: factor * c for p, c in self.terms.items()})

    def shift(self, s: float) -> "FracSeries":
        """Multiply by z^s."""
        return FracSeries({p + s: c for p, c in self.terms.items()})

    def evaluate(self, x: float) -> float:
        """Value at a positive real point (principal branch)."""
        return sum(c * x**p for p, c in self.terms.items())

    def isclose(self, other: "FracSeries", rel: float = 1e-12, exp_tol: float = 1e-12) -> bool:
        a, b = list(self.terms.items()), list(other.terms.items())
        if len(a) != len(b):
            return False
        for (p, c), (q, d) in zip(a, b):
            if abs(p - q) > exp_tol or abs(c - d) > rel * max(abs(c), abs(d)):
                return False
        return True


def _check_order(sigma: float) -> None:
    if not (0.0 <= sigma < 1.0):
        raise DomainError(f"order sigma must lie in [0, 1), got {sigma!r}", "sigma")


def frac_integral(s: FracSeries, sigma: float) -> FracSeries:
    _check_order(sigma)
    if sigma == 0:
        return s
    return FracSeries(
        {p + sigma: c * math.exp(log_gamma_ratio(p + 1, p + 1 + sigma)) for p, c in s.terms.items()}
    )


def frac_derivative(s: FracSeries, sigma: float) -> FracSeries:
    _check_order(sigma)
    for p in s.terms:
        if p + 1 - sigma <= 0:
            raise DomainError(f"exponent {p} cannot take a derivative of order {sigma}", "sigma")
    if sigma == 0:
        return s
    return FracSeries(
        {p - sigma: c * math.exp(log_gamma_ratio(p + 1, p + 1 - sigma)) for p, c in s.terms.items()}
    )


def frac_derivative_n(s: FracSeries, n: int, sigma: float) -> FracSeries:
    """Derivative of order n + σ: the order-σ derivative followed by n ordinary ones."""
    if int(n) != n or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}", "n")
    out = frac_derivative(s, sigma)
    for _ in range(int(n)):
        terms = {}
        for p, c in out.terms.items():
            if p == 0:
                continue
            if p - 1 < 0:
                raise DomainError(f"ordinary derivative of z^{p} leaves a negative exponent", "n")
            terms[p - 1] = c * p
        out = FracSeries(terms)
    return out


@dataclass(frozen=True)
class TremblayParams:
    tau: float
    mu: float

    def __post_init__(self):
        for name in ("tau", "mu"):
            v = getattr(self, name)
            if not (0.0 < v <= 1.0):
                raise DomainError(f"{name} must lie in (0, 1], got {v!r}", name)
        if not (0.0 <= self.tau - self.mu < 1.0):
            raise DomainError(f"need 0 <= tau - mu < 1, got {self.tau - self.mu!r}", "tau")


@dataclass(frozen=True)
class OperatorImage:
    """head·z^{head_power} - Σ c_e z^e, the shape of a Tremblay image or its derivative."""

    head: float
    head_power: int
    terms: Mapping[int, float]

    def __post_init__(self):
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(self.terms.items()))))

    def evaluate(self, z):
        zz = np.asarray(z, dtype=complex)
        out = self.head * zz**self.head_power
        for e, c in self.terms.items():
            out = out - c * zz**e
        return complex(out) if np.ndim(z) == 0 else out

    def as_gap_series(self, k: int) -> GapSeries:
        if self.head != 1.0 or self.head_power != 1:
            raise DomainError("only a unit-leading image is a normalized series", "head")
        return GapSeries(k, dict(self.terms))


def _multipliers(f: GapSeries, p: TremblayParams) -> dict[int, float]:
    # Γ(ν+τ)Γ(μ)/(Γ(ν+μ)Γ(τ)) = (τ/μ) Φ(ν)
    ratio = p.tau / p.mu
    return {nu: ratio * phi_ratio(nu, p.tau, p.mu) for nu in f.coeffs}


def tremblay(f: GapSeries, p: TremblayParams) -> OperatorImage:
    """(τ/μ) z - Σ (τ/μ) Φ(ν) a_ν z^ν."""
    m = _multipliers(f, p)
    return OperatorImage(p.tau / p.mu, 1, {nu: m[nu] * a for nu, a in f.coeffs.items()})


def tremblay_derivative(f: GapSeries, p: TremblayParams) -> OperatorImage:
    """τ/μ - Σ (τ/μ) ν Φ(ν) a_ν z^{ν-1}."""
    m = _multipliers(f, p)
    return OperatorImage(p.tau / p.mu, 0, {nu - 1: nu * m[nu] * a for nu, a in f.coeffs.items()})


def tremblay_by_definition(f: GapSeries, p: TremblayParams) -> FracSeries:
    """Γ(μ)/Γ(τ) z^{1-μ} D^{τ-μ}[z^{τ-1} f(z)] composed through FracSeries."""
    inner = FracSeries.from_gap(f).shift(p.tau - 1.0)
    image = frac_derivative(inner, p.tau - p.mu).shift(1.0 - p.mu)
    return image.scale(math.exp(log_gamma_ratio(p.mu, p.tau)))
