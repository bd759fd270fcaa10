"""Dense complex matrix arithmetic on top of numpy arrays.

Everything here works on square ``complex128`` arrays.  Hermitian inputs and
outputs are Hermitian *bitwise* (constructed by symmetrization), so downstream
code may rely on ``H == H.conj().T`` exactly rather than approximately.  The
eigensolver is a cyclic Jacobi iteration: unconditionally stable and accurate
at the matrix sizes this package targets (n <= 64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IllConditioned,
    NoConvergence,
    NotAccretive,
    NotPositiveDefinite,
    SingularMatrix,
)

#: Hard cap on matrix dimension for validated inputs.
MAX_DIM = 64

#: Pivot magnitudes below this are treated as exact singularity.
PIVOT_FLOOR = 1e-300

#: Default cap for the condition estimate of `inverse`.
DEFAULT_COND_CAP = 1e14

#: Relative floor for the smallest eigenvalue of the real part at
#: AccretiveMatrix construction.
ACCRETIVE_REL_FLOOR = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce input to a square complex128 array with finite entries."""
    if isinstance(a, AccretiveMatrix):
        return a.mat
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix has non-finite entries")
    return m


def symmetrize(a) -> np.ndarray:
    """Return (A + A*)/2, bitwise Hermitian."""
    m = as_matrix(a)
    return (m + m.conj().T) / 2


def real_part(a) -> np.ndarray:
    """Hermitian real part (A + A*)/2 of the Cartesian decomposition."""
    return symmetrize(a)


def imag_part(a) -> np.ndarray:
    """Hermitian imaginary part (A - A*)/(2i) of the Cartesian decomposition."""
    m = as_matrix(a)
    return (m - m.conj().T) / 2j


def frob(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(a)))


def inverse(a, cond_cap: float = DEFAULT_COND_CAP) -> np.ndarray:
    """Invert a square complex matrix by partial-pivoted LU.

    One Newton refinement step (X <- X(2I - AX)) keeps the residual
    ||AX - I|| at rounding level on well-conditioned inputs.

    Raises:
        SingularMatrix: a pivot magnitude fell below 1e-300.
        IllConditioned: the estimate ||A||_F * ||X||_F exceeded ``cond_cap``.
    """
    m = as_matrix(a)
    n = m.shape[0]
    lu = m.copy()
    perm = np.arange(n)
    for k in range(n):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[piv, k]) < PIVOT_FLOOR:
            raise SingularMatrix(f"pivot {abs(lu[piv, k]):.3e} below {PIVOT_FLOOR:g}")
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
        lu[k + 1 :, k] /= lu[k, k]
        if k + 1 < n:
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    # Solve L U X = P I for X = A^-1, all right-hand sides at once.
    x = np.eye(n, dtype=np.complex128)[perm]
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= lu[i, i + 1 :] @ x[i + 1 :]
        x[i] /= lu[i, i]
    x = x @ (2 * np.eye(n) - m @ x)
    cond_est = frob(m) * frob(x)
    if not math.isfinite(cond_est) or cond_est > cond_cap:
        raise IllConditioned(f"condition estimate {cond_est:.3e} exceeds cap {cond_cap:g}")
    return x


def _offdiag_norm(a: np.ndarray) -> float:
    # Summed directly over the off-diagonal entries; the difference
    # ||A||_F^2 - sum |a_ii|^2 cancels catastrophically near convergence.
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def _eig2x2(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Closed form for the 2x2 Hermitian case; the cyclic sweep is overkill there.
    a = h[0, 0].real
    d = h[1, 1].real
    b = h[0, 1]
    mid = 0.5 * (a + d)
    rad = math.hypot(0.5 * (a - d), abs(b))
    lo, hi = mid - rad, mid + rad
    if abs(b) == 0.0:
        if a <= d:
            return np.array([a, d]), np.eye(2, dtype=np.complex128)
        return np.array([d, a]), np.array([[0, 1], [1, 0]], dtype=np.complex128)
    v_hi = np.array([b, hi - a], dtype=np.complex128)
    v_hi /= np.linalg.norm(v_hi)
    v_lo = np.array([-np.conj(v_hi[1]), np.conj(v_hi[0])], dtype=np.complex128)
    vecs = np.column_stack([v_lo, v_hi])
    return np.array([lo, hi]), vecs


def herm_eig(h, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    h : array_like
        Hermitian matrix (symmetrized on entry, so near-Hermitian input is
        tolerated).
    max_sweeps : int
        Cap on the number of full cyclic sweeps.

    Returns
    -------
    (w, v)
        ``w`` ascending real eigenvalues, ``v`` unitary with columns the
        eigenvectors, so that ``h = v @ diag(w) @ v.conj().T``.

    Raises
    ------
    NoConvergence
        If the off-diagonal mass has not collapsed after ``max_sweeps``.
    """
    a = symmetrize(h)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real]), np.eye(1, dtype=np.complex128)
    if n == 2:
        return _eig2x2(a)
    v = np.eye(n, dtype=np.complex128)
    scale = frob(a)
    if scale == 0.0:
        return np.zeros(n), v
    stop = scale * n * 1e-16
    converged = False
    for _ in range(max_sweeps):
        off = _offdiag_norm(a)
        if off <= stop:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= stop / n:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                mag = abs(apq)
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                # Plane rotation G: columns (p,q) mix with a phase on q.
                g_pp, g_pq = c, s
                g_qp, g_qq = -s * np.conj(phase), c * np.conj(phase)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = col_p * g_pp + col_q * g_qp
                a[:, q] = col_p * g_pq + col_q * g_qq
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = row_p * np.conj(g_pp) + row_q * np.conj(g_qp)
                a[q, :] = row_p * np.conj(g_pq) + row_q * np.conj(g_qq)
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = vcol_p * g_pp + vcol_q * g_qp
                v[:, q] = vcol_p * g_pq + vcol_q * g_qq
    if not converged:
        off = _offdiag_norm(a)
        if off > stop:
            raise NoConvergence(f"Jacobi sweep cap {max_sweeps} hit, off-diagonal {off:.3e}")
    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _hpd_map(h, fn, what: str) -> np.ndarray:
    w, v = herm_eig(h)
    if w[0] <= 0.0:
        raise NotPositiveDefinite(f"{what} needs a positive definite argument "
                                  f"(smallest eigenvalue {w[0]:.3e})")
    return symmetrize((v * fn(w)) @ v.conj().T)


def hpd_power(h, p: float) -> np.ndarray:
    """Fractional power H^p of a Hermitian positive definite matrix."""
    return _hpd_map(h, lambda w: w**p, f"hpd_power(p={p})")


def hpd_log(h) -> np.ndarray:
    """Matrix logarithm of a Hermitian positive definite matrix."""
    return _hpd_map(h, np.log, "hpd_log")


def op_norm(a) -> float:
    """Operator (spectral) norm: largest singular value."""
    m = as_matrix(a)
    w, _ = herm_eig(m.conj().T @ m)
    return math.sqrt(max(float(w[-1]), 0.0))


@dataclass(frozen=True)
class LoewnerTolerance:
    """Tolerance policy for floating-point Loewner comparisons.

    ``relative`` is scaled by the larger operator norm of the comparands.
    """

    absolute: float = 1e-10
    relative: float = 1e-10

    def __post_init__(self):
        for name in ("absolute", "relative"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val >= 0.0):
                raise ValueError(f"{name} tolerance must be finite and >= 0, got {val}")


DEFAULT_LOEWNER_TOL = LoewnerTolerance()


def loewner_geq(x, y, tol: LoewnerTolerance = DEFAULT_LOEWNER_TOL) -> tuple[bool, float]:
    """Test X >= Y in the Loewner order, within tolerance.

    Returns ``(holds, margin)`` where margin is the smallest eigenvalue of
    X - Y; the comparison passes when
    ``margin >= -(tol.absolute + tol.relative * max(||X||, ||Y||))``.
    """
    xm = symmetrize(x)
    ym = symmetrize(y)
    if xm.shape != ym.shape:
        raise DimensionMismatch(f"shape {xm.shape} vs {ym.shape}")
    margin = float(herm_eig(xm - ym)[0][0])
    wx, _ = herm_eig(xm)
    wy, _ = herm_eig(ym)
    big = max(abs(wx[0]), abs(wx[-1]), abs(wy[0]), abs(wy[-1]))
    return margin >= -(tol.absolute + tol.relative * big), margin


@dataclass(frozen=True, eq=False)
class AccretiveMatrix:
    """A validated accretive matrix: real part strictly positive definite.

    ``re_min_eig`` caches the smallest eigenvalue of the real part.  Use
    :meth:`from_matrix` to construct; direct construction skips validation.
    """

    mat: np.ndarray
    re_min_eig: float

    @classmethod
    def from_matrix(cls, a) -> "AccretiveMatrix":
        m = as_matrix(a)
        if m.shape[0] > MAX_DIM:
            raise ValueError(f"dimension {m.shape[0]} exceeds the supported cap {MAX_DIM}")
        w, _ = herm_eig(real_part(m))
        lo = float(w[0])
        norm = max(abs(float(w[0])), abs(float(w[-1])))
        if lo <= ACCRETIVE_REL_FLOOR * norm or lo <= 0.0:
            raise NotAccretive(
                f"smallest eigenvalue of the real part is {lo:.6e} "
                f"(needs > {ACCRETIVE_REL_FLOOR:g} * ||Re A|| = {ACCRETIVE_REL_FLOOR * norm:.6e})"
            )
        m = m.copy()
        m.setflags(write=False)
        return cls(mat=m, re_min_eig=lo)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]
