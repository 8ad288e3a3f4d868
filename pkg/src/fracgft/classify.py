"""Membership in the class P_{τ,μ}(k, δ, γ) through its coefficient functional."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from .errors import DomainError, GapMismatchError
from .series import GapSeries
from .special_fn import phi_ratio, pochhammer

MEMBERSHIP_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    """(k, τ, μ, δ, γ) with 0<τ,μ≤1, 0≤τ-μ<1, 0≤δ<1, 0≤γ<1 and τ-μ+γ<1.

    ``allow_delta_one`` admits δ = 1, which the τ=μ=1 reductions need.
    """

    k: int
    tau: float
    mu: float
    delta: float
    gamma: float
    allow_delta_one: bool = False

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise DomainError(f"k must be an integer >= 1, got {self.k!r}", "k")
        object.__setattr__(self, "k", int(self.k))
        for name in ("tau", "mu", "delta", "gamma"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"{name} must be a finite number, got {v!r}", name)
            object.__setattr__(self, name, float(v))
        if not 0.0 < self.tau <= 1.0:
            raise DomainError(f"tau must lie in (0, 1], got {self.tau!r}", "tau")
        if not 0.0 < self.mu <= 1.0:
            raise DomainError(f"mu must lie in (0, 1], got {self.mu!r}", "mu")
        if not 0.0 <= self.tau - self.mu < 1.0:
            raise DomainError("need 0 <= tau - mu < 1", "tau")
        delta_hi_ok = self.delta <= 1.0 if self.allow_delta_one else self.delta < 1.0
        if not (0.0 <= self.delta and delta_hi_ok):
            raise DomainError(f"delta out of range, got {self.delta!r}", "delta")
        if not 0.0 <= self.gamma < 1.0:
            raise DomainError(f"gamma must lie in [0, 1), got {self.gamma!r}", "gamma")
        if not self.tau - self.mu + self.gamma < 1.0:
            raise DomainError("need tau - mu + gamma < 1", "gamma")

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "tau": self.tau, "mu": self.mu, "delta": self.delta, "gamma": self.gamma}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], allow_delta_one: bool = False) -> "ClassParams":
        if not isinstance(data, Mapping):
            raise DomainError("params must be a JSON object", "params")
        for name in ("k", "tau", "mu", "delta", "gamma"):
            if name not in data:
                raise DomainError(f"params missing '{name}'", name)
        return cls(
            data["k"], data["tau"], data["mu"], data["delta"], data["gamma"],
            allow_delta_one=allow_delta_one or bool(data.get("allow_delta_one", False)),
        )


@dataclass(frozen=True)
class Membership:
    member: bool
    functional: float
    margin: float


def class_weight(p: ClassParams, nu: int) -> float:
    """(1 + δν - δ) Φ(ν): the per-index weight in the coefficient functional."""
    return (1.0 + p.delta * nu - p.delta) * phi_ratio(nu, p.tau, p.mu)


def class_weights(p: ClassParams, nus) -> np.ndarray:
    return np.array([class_weight(p, int(nu)) for nu in nus], dtype=float)


def _check_gap(f: GapSeries, p: ClassParams) -> None:
    if f.k != p.k:
        raise GapMismatchError(f"series gap k={f.k} does not match class k={p.k}", "k")


def coefficient_functional(f: GapSeries, p: ClassParams) -> float:
    _check_gap(f, p)
    return sum(class_weight(p, nu) * a for nu, a in f.coeffs.items())


def is_member(f: GapSeries, p: ClassParams, order: float | None = None) -> Membership:
    """Decide membership; ``order`` replaces γ (used for the Hadamard order ξ)."""
    gamma = p.gamma if order is None else order
    value = coefficient_functional(f, p)
    margin = (1.0 - gamma) - value
    return Membership(margin >= -MEMBERSHIP_TOL, value, margin)


def extremal_coefficient(p: ClassParams) -> float:
    """(1-γ)(μ+1)_k / ((1+δk)(τ+1)_k)."""
    return (1.0 - p.gamma) * pochhammer(p.mu + 1, p.k) / ((1.0 + p.delta * p.k) * pochhammer(p.tau + 1, p.k))


def extremal(p: ClassParams) -> GapSeries:
    return GapSeries(p.k, {p.k + 1: extremal_coefficient(p)})


def max_coefficient(p: ClassParams, nu: int) -> float:
    """Largest a_ν for which the single-term z - a_ν z^ν is a member."""
    if int(nu) != nu or nu <= p.k:
        raise DomainError(f"nu must be an integer > k={p.k}, got {nu!r}", "nu")
    return (1.0 - p.gamma) / class_weight(p, int(nu))
