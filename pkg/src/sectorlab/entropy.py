"""Relative and Tsallis operator entropies of accretive matrices.

Both entropies are integrals of the harmonic-mean path through the removable
singularity at t = 0:

    S(A|B)      = integral_0^1 (A !_t B - A) / t dt
    T_lam(A|B)  = sin(lam*pi)/(lam*pi)
                  * integral_0^1 t^lam (1-t)^(-lam) * (A !_t B - A)/t dt

The Tsallis kernel splits into a Gauss-Jacobi weight (singular Beta factor)
and the bounded path factor, which keeps the quadrature spectral; the relative
entropy integrand is analytic on [0, 1] (limit A - A B^-1 A at t = 0), so a
plain Gauss-Legendre rule suffices.  (A #_lam B - A)/lam is the cheaper
single-quadrature route to the Tsallis entropy and is what most callers want;
the direct integral stays as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import InvalidWeight
from .linalg import frob, hpd_log, hpd_power, inverse, symmetrize
from .means import GeometricMeanConfig, _pair, check_weight, geometric_mean
from .quadrature import (
    MAX_NODES,
    IntegralResult,
    gauss_jacobi,
    gauss_legendre,
    integrate_adaptive,
    integrate_matrix,
)

DEFAULT_NODES = 64


@dataclass(frozen=True)
class EntropyConfig:
    """Quadrature settings for the entropy integrals."""

    rule_nodes: int = DEFAULT_NODES
    adaptive: bool = False
    tol: float = 1e-12

    def __post_init__(self):
        if self.rule_nodes < 1:
            raise ValueError(f"rule_nodes must be >= 1, got {self.rule_nodes}")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be > 0, got {self.tol}")


DEFAULT_CONFIG = EntropyConfig()


def _entropy_path(a: np.ndarray, b: np.ndarray):
    # t -> (A !_t B - A)/t; bounded on (0, 1), limit A - A B^-1 A at t -> 0.
    ia = inverse(a)
    ib = inverse(b)

    def path(t: float) -> np.ndarray:
        return (inverse((1.0 - t) * ia + t * ib) - a) / t

    return path


def relative_entropy_adaptive(a, b, tol: float = 1e-12, max_nodes: int = MAX_NODES) -> IntegralResult:
    """Node-doubling evaluation of the relative-entropy integral."""
    am, bm = _pair(a, b)
    return integrate_adaptive(_entropy_path(am, bm), gauss_legendre, tol=tol, max_nodes=max_nodes)


def relative_entropy(a, b, cfg: EntropyConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Relative operator entropy S(A|B) by Gauss-Legendre quadrature."""
    if cfg.adaptive:
        return relative_entropy_adaptive(a, b, tol=cfg.tol).value
    am, bm = _pair(a, b)
    return integrate_matrix(gauss_legendre(cfg.rule_nodes), _entropy_path(am, bm))


def relative_entropy_hpd(a, b) -> np.ndarray:
    """Closed form A^(1/2) log(A^(-1/2) B A^(-1/2)) A^(1/2) for HPD inputs."""
    am, bm = _pair(a, b)
    root = hpd_power(am, 0.5)
    iroot = hpd_power(am, -0.5)
    return symmetrize(root @ hpd_log(symmetrize(iroot @ bm @ iroot)) @ root)


def tsallis_entropy_adaptive(a, b, lam: float, tol: float = 1e-12,
                             max_nodes: int = MAX_NODES) -> IntegralResult:
    """Node-doubling evaluation of the Tsallis-entropy integral."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    factory = partial(gauss_jacobi, alpha=-lam, beta=lam)
    res = integrate_adaptive(_entropy_path(am, bm), factory, tol=tol, max_nodes=max_nodes)
    scale = math.sin(lam * math.pi) / (lam * math.pi)
    return IntegralResult(value=scale * res.value,
                          error_estimate=scale * res.error_estimate,
                          nodes_used=res.nodes_used)


def tsallis_entropy(a, b, lam: float, cfg: EntropyConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Tsallis relative operator entropy T_lam(A|B), direct integral form."""
    lam = check_weight(lam)
    if cfg.adaptive:
        return tsallis_entropy_adaptive(a, b, lam, tol=cfg.tol).value
    am, bm = _pair(a, b)
    rule = gauss_jacobi(cfg.rule_nodes, alpha=-lam, beta=lam)
    scale = math.sin(lam * math.pi) / (lam * math.pi)
    return scale * integrate_matrix(rule, _entropy_path(am, bm))


def tsallis_from_mean(a, b, lam: float,
                      cfg: GeometricMeanConfig | None = None) -> np.ndarray:
    """T_lam(A|B) = (A #_lam B - A)/lam via the geometric mean."""
    lam = check_weight(lam)
    am, bm = _pair(a, b)
    if cfg is None:
        cfg = GeometricMeanConfig()
    return (geometric_mean(am, bm, lam, cfg) - am) / lam


def tsallis_limit_probe(a, b, lambdas,
                        cfg: EntropyConfig = DEFAULT_CONFIG) -> list[tuple[float, float]]:
    """Deviation ||T_lam(A|B) - S(A|B)||_F along a descending weight grid.

    Every weight must lie in (0, 1/2]; the grid must be strictly decreasing.
    Returns (lam, deviation) pairs for limit diagnostics.
    """
    lams = [float(l) for l in lambdas]
    if any(not (0.0 < l <= 0.5) for l in lams):
        raise InvalidWeight(f"probe weights must lie in (0, 1/2], got {lams}")
    if any(y >= x for x, y in zip(lams, lams[1:], strict=False)):
        raise ValueError("probe weights must be strictly decreasing")
    am, bm = _pair(a, b)
    base = relative_entropy(am, bm, cfg)
    out = []
    for lam in lams:
        dev = frob(tsallis_entropy(am, bm, lam, cfg) - base)
        out.append((lam, float(dev)))
    return out
