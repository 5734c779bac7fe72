"""Dense-matrix numeric foundation: validation, rank, QR, SVD, pseudoinverse.

Everything operates on plain float64 ndarrays and is pure; `as_matrix` is
the single gate where inputs are checked (shape, finiteness), downstream
code assumes validated data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = [
    "EPS",
    "Tolerance",
    "as_matrix",
    "as_vector",
    "numerical_rank",
    "thin_qr",
    "full_svd",
    "pinv",
    "orth_basis",
    "nullspace_basis",
    "complete_basis",
]

EPS = float(np.finfo(np.float64).eps)


def as_matrix(a) -> np.ndarray:
    """Validate `a` as a 2-D float64 matrix with positive dims, finite entries."""
    m = np.array(a, dtype=np.float64, copy=True)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix dimensions must be positive, got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(a) -> np.ndarray:
    """Validate `a` as a 1-D float64 vector (a single-row/column 2-D array is flattened)."""
    v = np.array(a, dtype=np.float64, copy=True)
    if v.ndim == 2 and 1 in v.shape:
        v = v.ravel()
    if v.ndim != 1 or v.size < 1:
        raise ValueError(f"expected a vector, got shape {np.shape(a)}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


@dataclass(frozen=True)
class Tolerance:
    """Threshold for rank decisions: keep sigma with sigma > max(rel * sigma_max, abs).

    rel=None means the standard max(rows, cols) * machine epsilon.
    """

    rel: float | None = None
    abs: float = 0.0

    def __post_init__(self):
        if self.rel is not None and self.rel < 0:
            raise ValueError("rel must be nonnegative")
        if self.abs < 0:
            raise ValueError("abs must be nonnegative")

    def cutoff(self, shape, sigma_max: float) -> float:
        rel = max(shape) * EPS if self.rel is None else self.rel
        return max(rel * float(sigma_max), self.abs)


def numerical_rank(m, tol: Tolerance = Tolerance()) -> int:
    """Count singular values above the tolerance cutoff; 0 for the zero matrix."""
    m = as_matrix(m)
    sv = scipy.linalg.svdvals(m)
    if sv.size == 0 or sv[0] <= 0.0:
        return 0
    return int(np.count_nonzero(sv > tol.cutoff(m.shape, sv[0])))


def thin_qr(m, pivoted: bool = False, tol: Tolerance = Tolerance()):
    """Economy QR with nonnegative R diagonal; m[:, perm] ~= q @ r.

    With pivoted=True the columns are permuted (largest norms first) and
    q, r are truncated to the numerical rank read off the R diagonal.
    """
    m = as_matrix(m)
    if pivoted:
        q, r, perm = scipy.linalg.qr(m, mode="economic", pivoting=True)
        d = np.abs(np.diag(r))
        if d.size == 0 or d[0] <= 0.0:
            k = 0
        else:
            k = int(np.count_nonzero(d > tol.cutoff(m.shape, d[0])))
        q, r = q[:, :k], r[:k, :]
    else:
        q, r = scipy.linalg.qr(m, mode="economic")
        perm = np.arange(m.shape[1])
    for i in range(min(r.shape)):
        if r[i, i] < 0:
            r[i, :] = -r[i, :]
            q[:, i] = -q[:, i]
    return q, r, np.asarray(perm, dtype=int)


def _fix_column_signs(u: np.ndarray, v: np.ndarray | None, paired: int) -> None:
    # Deterministic orientation: leading significant entry of each u column
    # is made nonnegative; the first `paired` columns of v flip in tandem.
    for j in range(u.shape[1]):
        col = u[:, j]
        idx = np.flatnonzero(np.abs(col) > 1e-12)
        if idx.size and col[idx[0]] < 0:
            u[:, j] = -col
            if v is not None and j < paired:
                v[:, j] = -v[:, j]
    if v is not None:
        for j in range(paired, v.shape[1]):
            col = v[:, j]
            idx = np.flatnonzero(np.abs(col) > 1e-12)
            if idx.size and col[idx[0]] < 0:
                v[:, j] = -col


def full_svd(m):
    """Full SVD m = u @ Sigma @ v.T with square orthogonal u, v.

    Returns (u, sigma, v) with sigma descending of length min(rows, cols).
    Column signs are normalized so factorizations are deterministic.
    """
    m = as_matrix(m)
    u, sigma, vt = np.linalg.svd(m, full_matrices=True)
    v = vt.T.copy()
    u = u.copy()
    _fix_column_signs(u, v, paired=sigma.size)
    return u, sigma, v


def pinv(m, tol: Tolerance = Tolerance()) -> np.ndarray:
    """Moore-Penrose pseudoinverse with the shared rank tolerance."""
    m = as_matrix(m)
    u, sigma, v = full_svd(m)
    if sigma.size == 0 or sigma[0] <= 0.0:
        return np.zeros((m.shape[1], m.shape[0]))
    cut = tol.cutoff(m.shape, sigma[0])
    keep = sigma > cut
    inv = np.zeros_like(sigma)
    inv[keep] = 1.0 / sigma[keep]
    k = sigma.size
    return (v[:, :k] * inv) @ u[:, :k].T


def orth_basis(m, tol: Tolerance = Tolerance()) -> np.ndarray:
    """Orthonormal basis (columns) for the column space of m."""
    m = as_matrix(m)
    u, sigma, _ = full_svd(m)
    if sigma.size == 0 or sigma[0] <= 0.0:
        return np.zeros((m.shape[0], 0))
    k = int(np.count_nonzero(sigma > tol.cutoff(m.shape, sigma[0])))
    return u[:, :k]


def nullspace_basis(m, tol: Tolerance = Tolerance()) -> np.ndarray:
    """Orthonormal basis (columns) for the nullspace of m."""
    m = as_matrix(m)
    u, sigma, v = full_svd(m)
    if sigma.size == 0 or sigma[0] <= 0.0:
        return np.eye(m.shape[1])
    k = int(np.count_nonzero(sigma > tol.cutoff(m.shape, sigma[0])))
    return v[:, k:]


def complete_basis(q) -> np.ndarray:
    """Orthonormal completion: columns spanning the complement of col(q).

    q must have (numerically) orthonormal columns.
    """
    q = np.asarray(q, dtype=np.float64)
    m, k = q.shape
    if k == 0:
        return np.eye(m)
    if k >= m:
        return np.zeros((m, 0))
    full, _ = np.linalg.qr(q, mode="complete")
    return full[:, k:]
