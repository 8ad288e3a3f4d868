"""Class-preserving constructions: averages, convex combinations, segments, Hadamard product."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .classify import ClassParams, class_weight, extremal_coefficient, is_member
from .errors import DomainError, NonMemberError
from .series import GapSeries, check_same_gap, modified_convolution

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class WeightVector:
    q: tuple[float, ...]

    def __post_init__(self):
        q = tuple(float(x) for x in self.q)
        if not q:
            raise DomainError("weight vector is empty", "weights")
        if any(not math.isfinite(x) or x < 0 for x in q):
            raise DomainError("weights must be finite and >= 0", "weights")
        if abs(math.fsum(q) - 1.0) > WEIGHT_SUM_TOL:
            raise DomainError(f"weights must sum to 1, got {math.fsum(q)!r}", "weights")
        object.__setattr__(self, "q", q)


def convex_combination(fs: Sequence[GapSeries], w: WeightVector | Sequence[float]) -> GapSeries:
    """Θ = Σ q_j f_j, coefficients Σ_j q_j a_{ν,j}."""
    if not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(fs) != len(w.q):
        raise DomainError(f"{len(fs)} functions but {len(w.q)} weights", "weights")
    k = check_same_gap(*fs)
    coeffs: dict[int, float] = {}
    for qj, f in zip(w.q, fs):
        for nu, a in f.coeffs.items():
            coeffs[nu] = coeffs.get(nu, 0.0) + qj * a
    return GapSeries(k, coeffs)


def average(f1: GapSeries, f2: GapSeries) -> GapSeries:
    return convex_combination([f1, f2], WeightVector((0.5, 0.5)))


def segment(f: GapSeries, h: GapSeries, eta: float) -> GapSeries:
    """Δ = (1-η) f + η h."""
    if not 0.0 <= eta <= 1.0:
        raise DomainError(f"eta must lie in [0, 1], got {eta!r}", "eta")
    check_same_gap(f, h)
    if eta == 0.0:
        return f
    if eta == 1.0:
        return h
    return convex_combination([f, h], WeightVector((1.0 - eta, eta)))


def hadamard_order(p: ClassParams) -> float:
    """ξ = 1 - (1-γ)²(μ+1)_k / ((1+δk)(τ+1)_k)."""
    return 1.0 - (1.0 - p.gamma) * extremal_coefficient(p)


def xi_profile(p: ClassParams, nu: int) -> float:
    """Ξ(ν) = 1 - (1-γ)² / ((1+δν-δ)Φ(ν)); its value at ν = k+1 is the Hadamard order."""
    return 1.0 - (1.0 - p.gamma) ** 2 / class_weight(p, nu)


def hadamard_with_order(f: GapSeries, psi: GapSeries, p: ClassParams) -> tuple[GapSeries, float]:
    """Modified Hadamard product of two members and the largest order ξ it is guaranteed."""
    for name, g in (("series", f), ("series2", psi)):
        m = is_member(g, p)
        if not m.member:
            raise NonMemberError(f"{name} is not a member (margin {m.margin:.3e})", name)
    return modified_convolution(f, psi), hadamard_order(p)
