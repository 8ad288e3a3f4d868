"""Normalized negative-coefficient functions f(z) = z - Σ_{ν>k} a_ν z^ν."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping

import numpy as np

from .errors import DomainError, GapMismatchError


def horner(coeffs: np.ndarray, z):
    """Σ coeffs[j] z^j by nested multiplication; z may be an array."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def _scalar_or_array(value, like):
    return complex(value) if np.ndim(like) == 0 else value


def _warn_outside(z) -> None:
    if np.any(np.abs(z) >= 1.0):
        warnings.warn("evaluating outside the open unit disk", RuntimeWarning, stacklevel=3)


@dataclass(frozen=True)
class GapSeries:
    """f(z) = z - Σ a_ν z^ν with every stored ν ≥ k+1 and a_ν ≥ 0.

    Coefficients are stored sparsely; missing indices read as zero and
    explicit zeros are allowed.
    """

    k: int
    coeffs: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise DomainError(f"gap index k must be an integer >= 1, got {self.k!r}", "k")
        clean: dict[int, float] = {}
        for nu, a in sorted(self.coeffs.items()):
            if isinstance(nu, bool) or int(nu) != nu:
                raise DomainError(f"index {nu!r} is not an integer", "nu")
            nu = int(nu)
            if nu <= self.k:
                raise DomainError(f"index nu={nu} must exceed k={self.k}", "nu")
            a = float(a)
            if not math.isfinite(a) or a < 0:
                raise DomainError(f"coefficient a_{nu}={a!r} must be finite and >= 0", "a")
            clean[nu] = a
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    @property
    def N(self) -> int:
        """Largest stored index (k when nothing is stored)."""
        return max(self.coeffs, default=self.k)

    def coefficient(self, nu: int) -> float:
        return self.coeffs.get(nu, 0.0)

    def dense(self) -> np.ndarray:
        """Coefficients a_{k+1}, ..., a_N as a dense array."""
        out = np.zeros(self.N - self.k)
        for nu, a in self.coeffs.items():
            out[nu - self.k - 1] = a
        return out

    def indices(self) -> np.ndarray:
        return np.arange(self.k + 1, self.N + 1)

    def with_coeffs(self, coeffs: Mapping[int, float]) -> "GapSeries":
        return GapSeries(self.k, coeffs)

    # JSON form: {"k": 1, "coefficients": [{"nu": 2, "a": 0.25}]}
    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "coefficients": [{"nu": nu, "a": a} for nu, a in self.coeffs.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "GapSeries":
        if not isinstance(data, Mapping):
            raise DomainError("series must be a JSON object", "series")
        if "k" not in data:
            raise DomainError("series is missing 'k'", "k")
        k = data["k"]
        if not isinstance(k, int) or isinstance(k, bool):
            raise DomainError(f"k must be an integer, got {k!r}", "k")
        terms = data.get("coefficients", [])
        if not isinstance(terms, list):
            raise DomainError("'coefficients' must be a list", "coefficients")
        coeffs: dict[int, float] = {}
        for term in terms:
            if not isinstance(term, Mapping) or "nu" not in term or "a" not in term:
                raise DomainError("each coefficient needs 'nu' and 'a'", "coefficients")
            nu, a = term["nu"], term["a"]
            if not isinstance(nu, int) or isinstance(nu, bool):
                raise DomainError(f"nu must be an integer, got {nu!r}", "nu")
            if not isinstance(a, (int, float)) or isinstance(a, bool):
                raise DomainError(f"a must be a number, got {a!r}", "a")
            if nu in coeffs:
                raise DomainError(f"duplicate index nu={nu}", "nu")
            coeffs[nu] = a
        return cls(k, coeffs)


def identity(k: int = 1) -> GapSeries:
    """f(z) = z."""
    return GapSeries(k, {})


def evaluate(f: GapSeries, z):
    """f(z) = z - z^{k+1} Σ a_ν z^{ν-k-1}."""
    zz = np.asarray(z, dtype=complex)
    _warn_outside(zz)
    out = zz - zz ** (f.k + 1) * horner(f.dense(), zz)
    return _scalar_or_array(out, z)


def evaluate_derivative(f: GapSeries, z):
    """f'(z) = 1 - Σ ν a_ν z^{ν-1}."""
    zz = np.asarray(z, dtype=complex)
    _warn_outside(zz)
    out = 1.0 - zz**f.k * horner(f.indices() * f.dense(), zz)
    return _scalar_or_array(out, z)


def evaluate_second_derivative(f: GapSeries, z):
    """f''(z) = -Σ ν(ν-1) a_ν z^{ν-2}."""
    zz = np.asarray(z, dtype=complex)
    _warn_outside(zz)
    nu = f.indices()
    out = -(zz ** (f.k - 1)) * horner(nu * (nu - 1) * f.dense(), zz)
    return _scalar_or_array(out, z)


def check_same_gap(*fs: GapSeries) -> int:
    ks = {f.k for f in fs}
    if len(ks) != 1:
        raise GapMismatchError(f"gap indices differ: {sorted(ks)}", "k")
    return ks.pop()


def modified_convolution(f: GapSeries, psi: GapSeries) -> GapSeries:
    """f * ψ = z - Σ a_ν λ_ν z^ν over the indices stored in both."""
    k = check_same_gap(f, psi)
    common = f.coeffs.keys() & psi.coeffs.keys()
    return GapSeries(k, {nu: f.coeffs[nu] * psi.coeffs[nu] for nu in common})
