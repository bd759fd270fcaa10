"""Weighted operator means of accretive matrices.

The weighted arithmetic and harmonic means carry over to accretive inputs by
their algebraic formulas.  The weighted geometric mean does not; it is defined
here through its integral representation

    A #_lam B = sin(lam*pi)/pi * integral_0^1 t^(lam-1) (1-t)^(-lam) (A !_t B) dt,

evaluated with a Gauss-Jacobi rule whose weight absorbs the Beta kernel.  For
Hermitian positive definite inputs the classical closed form is available as
an independent oracle, and the half-weight Drury mean gives a second integral
route at lam = 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import DimensionMismatch, InvalidScalar, InvalidWeight
from .linalg import as_matrix, frob, hpd_power, inverse, symmetrize
from .quadrature import (
    MAX_NODES,
    IntegralResult,
    gauss_jacobi,
    integrate_adaptive,
    integrate_matrix,
)

DEFAULT_NODES = 64


def check_weight(lam: float) -> float:
    """Validate a mean weight; the endpoints 0 and 1 are rejected."""
    lam = float(lam)
    if not (math.isfinite(lam) and 0.0 < lam < 1.0):
        raise InvalidWeight(f"weight must lie strictly inside (0, 1), got {lam!r}")
    return lam


@dataclass(frozen=True)
class GeometricMeanConfig:
    """Quadrature settings for the integral means."""

    rule_nodes: int = DEFAULT_NODES
    adaptive: bool = False
    tol: float = 1e-12

    def __post_init__(self):
        if self.rule_nodes < 1:
            raise ValueError(f"rule_nodes must be >= 1, got {self.rule_nodes}")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be > 0, got {self.tol}")


DEFAULT_CONFIG = GeometricMeanConfig()


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    am = as_matrix(a)
    bm = as_matrix(b)
    if am.shape != bm.shape:
        raise DimensionMismatch(f"shape {am.shape} vs {bm.shape}")
    return am, bm


def arithmetic_mean(a, b, lam: float) -> np.ndarray:
    """(1-lam) A + lam B."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    return (1.0 - lam) * am + lam * bm


def harmonic_mean(a, b, lam: float) -> np.ndarray:
    """((1-lam) A^-1 + lam B^-1)^-1."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    return inverse((1.0 - lam) * inverse(am) + lam * inverse(bm))


def geometric_mean_hpd(a, b, lam: float) -> np.ndarray:
    """Closed-form A^(1/2) (A^(-1/2) B A^(-1/2))^lam A^(1/2) for HPD inputs."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    root = hpd_power(am, 0.5)
    iroot = hpd_power(am, -0.5)
    mid = hpd_power(symmetrize(iroot @ bm @ iroot), lam)
    return symmetrize(root @ mid @ root)


def _harmonic_path(a: np.ndarray, b: np.ndarray):
    # t -> A !_t B with the two fixed inverses hoisted out of the node loop.
    ia = inverse(a)
    ib = inverse(b)

    def path(t: float) -> np.ndarray:
        return inverse((1.0 - t) * ia + t * ib)

    return path


def _gauges(am: np.ndarray, bm: np.ndarray, lam: float) -> tuple[np.ndarray, np.ndarray, float]:
    # The mean is homogeneous: (aA) #_lam (bB) = a^(1-lam) b^lam (A #_lam B).
    # Normalizing each argument to unit Frobenius norm before quadrature makes
    # the computed mean scaling-equivariant to rounding and keeps the
    # integrand's poles where the node count was calibrated.
    sa = frob(am)
    sb = frob(bm)
    if sa <= 0.0 or sb <= 0.0:
        return am, bm, 1.0
    return am / sa, bm / sb, sa ** (1.0 - lam) * sb**lam


def geometric_mean_adaptive(a, b, lam: float, tol: float = 1e-12,
                            max_nodes: int = MAX_NODES) -> IntegralResult:
    """Node-doubling evaluation of the geometric-mean integral."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    am, bm, gauge = _gauges(am, bm, lam)
    f = _harmonic_path(am, bm)
    factory = partial(gauss_jacobi, alpha=-lam, beta=lam - 1.0)
    res = integrate_adaptive(f, factory, tol=tol, max_nodes=max_nodes)
    scale = gauge * math.sin(lam * math.pi) / math.pi
    return IntegralResult(value=scale * res.value,
                          error_estimate=scale * res.error_estimate,
                          nodes_used=res.nodes_used)


def geometric_mean(a, b, lam: float, cfg: GeometricMeanConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Weighted geometric mean of two accretive matrices (integral form)."""
    lam = check_weight(lam)
    if cfg.adaptive:
        return geometric_mean_adaptive(a, b, lam, tol=cfg.tol).value
    am, bm = _pair(a, b)
    am, bm, gauge = _gauges(am, bm, lam)
    rule = gauss_jacobi(cfg.rule_nodes, alpha=-lam, beta=lam - 1.0)
    scale = gauge * math.sin(lam * math.pi) / math.pi
    return scale * integrate_matrix(rule, _harmonic_path(am, bm))


def drury_mean_adaptive(a, b, tol: float = 1e-12, max_nodes: int = MAX_NODES) -> IntegralResult:
    """Node-doubling evaluation of the Drury half-weight mean."""
    am, bm = _pair(a, b)
    am, bm, gauge = _gauges(am, bm, 0.5)
    res = integrate_adaptive(_convex_inverse_path(am, bm),
                             partial(gauss_jacobi, alpha=-0.5, beta=-0.5),
                             tol=tol, max_nodes=max_nodes)
    value = gauge * inverse(res.value / math.pi)
    return IntegralResult(value=value, error_estimate=gauge * res.error_estimate / math.pi,
                          nodes_used=res.nodes_used)


def _convex_inverse_path(a: np.ndarray, b: np.ndarray):
    def path(u: float) -> np.ndarray:
        return inverse(u * a + (1.0 - u) * b)

    return path


def drury_mean(a, b, cfg: GeometricMeanConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Half-weight geometric mean by Drury's resolvent integral.

    The half-line integral is mapped to (0, 1) by u = t^2/(1+t^2); that leaves
    the smooth, A<->B symmetric factor (u A + (1-u) B)^-1 under a
    Gauss-Jacobi(-1/2, -1/2) weight:

        A # B = ( 1/pi * integral_0^1 (uA + (1-u)B)^-1 [u(1-u)]^(-1/2) du )^-1.
    """
    if cfg.adaptive:
        return drury_mean_adaptive(a, b, tol=cfg.tol).value
    am, bm = _pair(a, b)
    am, bm, gauge = _gauges(am, bm, 0.5)
    rule = gauss_jacobi(cfg.rule_nodes, alpha=-0.5, beta=-0.5)
    inner = integrate_matrix(rule, _convex_inverse_path(am, bm)) / math.pi
    return gauge * inverse(inner)


def scalar_geometric(alpha: float, beta: float, lam: float) -> float:
    """alpha^(1-lam) * beta^lam for positive reals."""
    lam = check_weight(lam)
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise InvalidScalar(f"alpha must be a positive real, got {alpha!r}")
    if not (beta > 0.0 and math.isfinite(beta)):
        raise InvalidScalar(f"beta must be a positive real, got {beta!r}")
    return float(alpha ** (1.0 - lam) * beta**lam)
