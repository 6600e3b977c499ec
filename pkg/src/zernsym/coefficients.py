"""Exact radial coefficients, normalization radicands and full polynomial records."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial

from .indexing import BwIndex, _as_index, j_to_nm, nm_to_j, nm_to_k

UNITY = "unity"
COSINE = "cosine"
SINE = "sine"


@dataclass(frozen=True)
class RadialPoly:
    """R_n^|m| as ``sum(coeffs[s] * rho**powers[s])`` with exact integer coefficients."""

    n: int
    m_abs: int
    k: int
    coeffs: tuple[int, ...]
    powers: tuple[int, ...]

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class Normalization:
    radicand: int

    @property
    def value(self) -> float:
        return self.radicand ** 0.5


@dataclass(frozen=True)
class AngularFactor:
    kind: str
    frequency: int


@dataclass(frozen=True)
class ZernikeSpec:
    j: int
    idx: BwIndex
    norm: Normalization
    radial: RadialPoly
    angular: AngularFactor

    def to_record(self) -> dict:
        """Flat record used for JSON export; integers stay exact."""
        return {
            "j": self.j,
            "n": self.idx.n,
            "m": self.idx.m,
            "radicand": self.norm.radicand,
            "coeffs": list(self.radial.coeffs),
            "powers": list(self.radial.powers),
            "angular_kind": self.angular.kind,
            "angular_frequency": self.angular.frequency,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_record(), **kwargs)


def binom_real(alpha: float, i: int) -> float:
    """Generalized binomial coefficient C(alpha, i) as a running product.

    Multiplication and division alternate term by term so intermediate values
    stay close to the result instead of growing like a factorial.
    """
    if i < 0:
        raise ValueError(f"i must be non-negative, got {i}")
    prod = 1.0
    for t in range(i):
        prod = prod * (alpha - t) / (i - t)
    return prod


def binom_exact(a: int, b: int) -> int:
    """Exact C(a, b) for integers ``0 <= b <= a`` (arbitrary precision)."""
    if a < 0 or b < 0:
        raise ValueError(f"arguments must be non-negative, got ({a}, {b})")
    if b > a:
        raise ValueError(f"b={b} exceeds a={a}")
    b = min(b, a - b)
    result = 1
    for t in range(b):
        # result == C(a, t) here, so the division is exact
        result = result * (a - t) // (t + 1)
    return result


def radial_coefficients(idx) -> RadialPoly:
    """Coefficients ``(-1)^s C(k, s) C(n-s, k)`` and powers ``n - 2s``, s = 0..k."""
    idx = _as_index(idx)
    n, k = idx.n, nm_to_k(idx)
    coeffs = []
    sign = 1
    for s in range(k + 1):
        coeffs.append(sign * binom_exact(k, s) * binom_exact(n - s, k))
        sign = -sign
    powers = tuple(n - 2 * s for s in range(k + 1))
    return RadialPoly(n, idx.m_abs, k, tuple(coeffs), powers)


def radial_coefficients_oracle(idx) -> RadialPoly:
    """Same polynomial from the factorial form; used only to cross-check."""
    idx = _as_index(idx)
    n, ma = idx.n, idx.m_abs
    k = (n - ma) // 2
    coeffs = tuple(
        (-1) ** s
        * factorial(n - s)
        // (factorial(s) * factorial((n + ma) // 2 - s) * factorial((n - ma) // 2 - s))
        for s in range(k + 1)
    )
    powers = tuple(n - 2 * s for s in range(k + 1))
    return RadialPoly(n, ma, k, coeffs, powers)


def normalization_radicand(idx) -> Normalization:
    n, m = _as_index(idx)
    return Normalization(n + 1 if m == 0 else 2 * (n + 1))


def angular_factor(idx) -> AngularFactor:
    """Angular part chosen by m and the parity of the Noll index.

    m = 0 gives the constant factor for every j (even j = 4, 22, ... included).
    """
    idx = _as_index(idx)
    if idx.m == 0:
        return AngularFactor(UNITY, 0)
    kind = COSINE if nm_to_j(idx) % 2 == 0 else SINE
    return AngularFactor(kind, idx.m_abs)


def zernike_spec(j: int) -> ZernikeSpec:
    idx = j_to_nm(j)
    return ZernikeSpec(
        j=int(j),
        idx=idx,
        norm=normalization_radicand(idx),
        radial=radial_coefficients(idx),
        angular=angular_factor(idx),
    )
