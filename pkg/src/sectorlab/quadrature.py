"""Gaussian quadrature on (0, 1) for matrix-valued integrands.

Rules are generated by the Golub-Welsch construction: eigenvalues of the
symmetric tridiagonal matrix built from the three-term recurrence of the
orthogonal polynomial family give the nodes, squared first eigenvector
components give the weights.  Jacobi rules integrate against the weight
``t^beta * (1-t)^alpha``, which absorbs the endpoint singularities of the
Beta-type kernels used throughout this package, so smooth factors converge
spectrally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import (
    EvaluationFailure,
    InvalidNodeCount,
    InvalidParameters,
    InvalidWeight,
    NoConvergence,
)
from .linalg import frob, herm_eig

MAX_NODES = 4096

#: largest rule size solved with the in-package Jacobi eigensolver; larger
#: tridiagonal problems go to numpy's LAPACK backend.
_OWN_EIG_LIMIT = 64


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights on the open interval (0, 1)."""

    kind: str  # "legendre" or "jacobi"
    alpha: float
    beta: float
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        n = self.nodes
        w = self.weights
        if n.ndim != 1 or w.shape != n.shape:
            raise InvalidParameters("nodes and weights must be 1-d arrays of equal length")
        if not (np.all(n > 0.0) and np.all(n < 1.0) and np.all(np.diff(n) > 0.0)):
            raise InvalidParameters("nodes must be strictly increasing inside (0, 1)")
        if not np.all(w > 0.0):
            raise InvalidParameters("weights must be strictly positive")

    @property
    def count(self) -> int:
        return len(self.nodes)


def _beta_fn(a: float, b: float) -> float:
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


@lru_cache(maxsize=256)
def _rule_cached(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    # Monic Jacobi recurrence on [-1, 1] with weight (1-x)^alpha (1+x)^beta,
    # then the affine map to (0, 1).
    ab = alpha + beta
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    k = np.arange(1, n, dtype=float)
    if n > 1:
        diag[1:] = (beta**2 - alpha**2) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = math.sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) ** 2 * (ab + 3.0)))
    if n > 2:
        k = np.arange(2, n, dtype=float)
        num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab)
        den = (2.0 * k + ab) ** 2 * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0)
        off[1:] = np.sqrt(num / den)
    if n <= _OWN_EIG_LIMIT:
        tri = np.diag(diag).astype(np.complex128)
        if n > 1:
            idx = np.arange(n - 1)
            tri[idx, idx + 1] = off
            tri[idx + 1, idx] = off
        x, vecs = herm_eig(tri)
    else:
        from scipy.linalg import eigh_tridiagonal

        x, vecs = eigh_tridiagonal(diag, off)
    first = np.abs(vecs[0, :]) ** 2
    mass = _beta_fn(beta + 1.0, alpha + 1.0)
    nodes = (x.real + 1.0) / 2.0
    # Rescale so the weights carry the analytic total mass to one ulp; the
    # raw |v_0|^2 components sum to 1 only up to eigensolver rounding.
    weights = (mass / float(np.sum(first))) * first
    order = np.argsort(nodes, kind="stable")
    nodes = nodes[order]
    weights = weights[order]
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(n: int) -> QuadratureRule:
    """n-node Gauss-Legendre rule on [0, 1] (weight 1)."""
    if not (isinstance(n, int) and 1 <= n <= MAX_NODES):
        raise InvalidNodeCount(f"node count must be an integer in [1, {MAX_NODES}], got {n!r}")
    nodes, weights = _rule_cached(n, 0.0, 0.0)
    return QuadratureRule("legendre", 0.0, 0.0, nodes, weights)


def gauss_jacobi(n: int, alpha: float, beta: float) -> QuadratureRule:
    """n-node Gauss-Jacobi rule on [0, 1] for the weight t^beta (1-t)^alpha."""
    if not (isinstance(n, int) and 1 <= n <= MAX_NODES):
        raise InvalidNodeCount(f"node count must be an integer in [1, {MAX_NODES}], got {n!r}")
    if not (alpha > -1.0 and beta > -1.0 and math.isfinite(alpha) and math.isfinite(beta)):
        raise InvalidParameters(f"Jacobi exponents must be > -1, got alpha={alpha}, beta={beta}")
    nodes, weights = _rule_cached(n, float(alpha), float(beta))
    return QuadratureRule("jacobi", float(alpha), float(beta), nodes, weights)


def beta_normalization(lam: float) -> float:
    """B(lam, 1-lam) = pi / sin(lam*pi), the total mass of the mean's kernel."""
    if not (0.0 < lam < 1.0):
        raise InvalidWeight(f"weight must lie strictly inside (0, 1), got {lam!r}")
    return math.pi / math.sin(lam * math.pi)


@dataclass(frozen=True)
class IntegralResult:
    """Adaptive integration outcome."""

    value: np.ndarray
    error_estimate: float
    nodes_used: int

    def __post_init__(self):
        if not (math.isfinite(self.error_estimate) and self.error_estimate >= 0.0):
            raise ValueError(f"error estimate must be finite and >= 0, got {self.error_estimate}")


def integrate_matrix(rule: QuadratureRule, f: Callable[[float], np.ndarray]) -> np.ndarray:
    """Sum w_k * f(t_k) over the rule's nodes, in ascending node order.

    The reduction uses numpy's pairwise summation over the fixed node order,
    so results are deterministic and rounding stays near machine level.
    """
    vals = []
    for t in rule.nodes:
        try:
            val = np.asarray(f(float(t)), dtype=np.complex128)
        except EvaluationFailure:
            raise
        except Exception as exc:
            raise EvaluationFailure(f"integrand raised at node t={t!r}: {exc}", node=float(t)) from exc
        if not np.all(np.isfinite(val.real)) or not np.all(np.isfinite(val.imag)):
            raise EvaluationFailure(f"integrand non-finite at node t={t!r}", node=float(t))
        vals.append(val)
    stacked = np.stack(vals)
    return np.sum(stacked * rule.weights.reshape((-1,) + (1,) * vals[0].ndim), axis=0)


def integrate_adaptive(
    f: Callable[[float], np.ndarray],
    rule_factory: Callable[[int], QuadratureRule],
    tol: float,
    max_nodes: int = MAX_NODES,
) -> IntegralResult:
    """Node-doubling integration from 16 nodes until successive results agree.

    Doubles the node count until the Frobenius distance between consecutive
    results drops to ``tol``.  Raises :class:`NoConvergence` if ``max_nodes``
    is reached first; the best result rides along as the error's ``payload``.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if max_nodes < 32:
        raise ValueError("max_nodes must allow at least one doubling (>= 32)")
    n = 16
    prev = integrate_matrix(rule_factory(n), f)
    while 2 * n <= max_nodes:
        n *= 2
        cur = integrate_matrix(rule_factory(n), f)
        err = frob(cur - prev)
        if err <= tol:
            return IntegralResult(value=cur, error_estimate=err, nodes_used=n)
        prev = cur
    raise NoConvergence(
        f"adaptive integration did not reach tol={tol:g} within {max_nodes} nodes",
        payload=IntegralResult(value=prev, error_estimate=err, nodes_used=n),
    )
