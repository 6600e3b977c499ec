"""Numerical evaluation and quadrature checks of orthonormality on the unit disk."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coefficients import COSINE, SINE, RadialPoly, ZernikeSpec, zernike_spec


@dataclass(frozen=True)
class QuadratureConfig:
    """Gauss-Legendre nodes in t = rho**2 times equispaced nodes in theta."""

    radial_nodes: int = 64
    angular_nodes: int = 256

    def __post_init__(self):
        if self.radial_nodes < 2:
            raise ValueError(f"radial_nodes must be >= 2, got {self.radial_nodes}")
        if self.angular_nodes < 4:
            raise ValueError(f"angular_nodes must be >= 4, got {self.angular_nodes}")


def eval_radial(poly: RadialPoly, rho, strict: bool = True):
    """Evaluate R_n^m at ``rho`` (scalar or array).

    Horner's scheme runs in t = rho**2 and the result is scaled by
    rho**|m|.  With ``strict=False`` any real rho is accepted (the parity
    property needs rho < 0).
    """
    r = np.asarray(rho, dtype=float)
    if strict and (np.any(r < 0.0) or np.any(r > 1.0) or np.any(np.isnan(r))):
        raise ValueError("rho must lie in [0, 1]")
    t = r * r
    acc = np.full_like(t, float(poly.coeffs[0]))
    for c in poly.coeffs[1:]:
        acc = acc * t + float(c)
    # factor the sign out so R(-rho) = (-1)^n R(rho) holds bit for bit
    out = acc * np.abs(r) ** poly.m_abs
    if poly.m_abs % 2:
        out = out * np.sign(r)
    return out.item() if out.ndim == 0 else out


def eval_angular(spec: ZernikeSpec, theta):
    th = np.asarray(theta, dtype=float)
    ang = spec.angular
    if ang.kind == COSINE:
        out = np.cos(ang.frequency * th)
    elif ang.kind == SINE:
        out = np.sin(ang.frequency * th)
    else:
        out = np.ones_like(th)
    return out.item() if out.ndim == 0 else out


def eval_zernike(spec: ZernikeSpec | int, rho, theta, normalized: bool = True, strict: bool = True):
    """Z_j(rho, theta); ``spec`` may be a ZernikeSpec or a Noll index."""
    if not isinstance(spec, ZernikeSpec):
        spec = zernike_spec(spec)
    value = np.multiply(eval_radial(spec.radial, rho, strict=strict), eval_angular(spec, theta))
    if normalized:
        value = value * math.sqrt(spec.norm.radicand)
    return value.item() if np.ndim(value) == 0 else value


@lru_cache(maxsize=64)
def gauss_legendre(n: int, tol: float = 1e-15, max_iter: int = 100):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].

    Roots of P_n are polished by Newton's method starting from the usual
    cosine estimates.
    """
    if n < 1:
        raise ValueError(f"need at least one node, got {n}")
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(max_iter):
        p0, p1 = np.ones_like(x), x.copy()
        for deg in range(2, n + 1):
            p0, p1 = p1, ((2 * deg - 1) * x * p1 - (deg - 1) * p0) / deg
        # p1 = P_n(x), p0 = P_{n-1}(x)
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < tol:
            break
    p0, p1 = np.ones_like(x), x.copy()
    for deg in range(2, n + 1):
        p0, p1 = p1, ((2 * deg - 1) * x * p1 - (deg - 1) * p0) / deg
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    x, w = x[order], w[order]
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def _radial_rule(cfg: QuadratureConfig):
    # int_0^1 f(rho) rho drho = 1/2 int_0^1 f(sqrt t) dt, t mapped from [-1, 1]
    x, w = gauss_legendre(cfg.radial_nodes)
    t = 0.5 * (x + 1.0)
    return np.sqrt(t), 0.25 * w


def _angular_rule(cfg: QuadratureConfig):
    theta = 2.0 * np.pi * np.arange(cfg.angular_nodes) / cfg.angular_nodes
    return theta, 2.0 * np.pi / cfg.angular_nodes


def inner_product(j1: int, j2: int, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Quadrature estimate of the disk integral of Z_j1 * Z_j2 (measure rho drho dtheta)."""
    s1, s2 = zernike_spec(j1), zernike_spec(j2)
    rho, wr = _radial_rule(cfg)
    theta, wt = _angular_rule(cfg)
    # the integrand factorizes, so the tensor rule splits into two sums
    radial = np.sum(wr * eval_radial(s1.radial, rho) * eval_radial(s2.radial, rho))
    angular = wt * np.sum(eval_angular(s1, theta) * eval_angular(s2, theta))
    return float(math.sqrt(s1.norm.radicand * s2.norm.radicand) * radial * angular)


def gram_matrix(j_max: int, cfg: QuadratureConfig = QuadratureConfig()) -> np.ndarray:
    """All inner products for 1 <= j, j' <= j_max on the full tensor grid."""
    if j_max < 1:
        raise ValueError(f"j_max must be >= 1, got {j_max}")
    rho, wr = _radial_rule(cfg)
    theta, wt = _angular_rule(cfg)
    weights = np.outer(wr, np.full(theta.shape, wt)).ravel()
    rr, tt = np.meshgrid(rho, theta, indexing="ij")
    rr, tt = rr.ravel(), tt.ravel()
    values = np.empty((j_max, rr.size))
    for j in range(1, j_max + 1):
        values[j - 1] = eval_zernike(zernike_spec(j), rr, tt)
    return (values * weights) @ values.T


def max_orthonormality_error(j_max: int, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """max |<Z_j, Z_j'> - pi delta_jj'| over the Gram matrix."""
    g = gram_matrix(j_max, cfg)
    return float(np.max(np.abs(g - np.pi * np.eye(j_max))))
