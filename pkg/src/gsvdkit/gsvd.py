"""GH-form generalized SVD of a matrix pair with a common column count.

The factorization of the stacked pair is

    [A; B] = [U C; V S] H

with U (m1 x m1) and V (m2 x m2) orthogonal, C and S one-diagonal cosine
and sine matrices satisfying C'C + S'S = I_r, and H (r x n) of full row
rank r = rank([A; B]).  The columns of [U C; V S] are an orthonormal
basis for the column space of the stacked pair; H holds the coordinates
of [A; B] in that basis.  The generalized singular values are the
cotangents c_i / s_i, which may be zero, finite, or infinite.

Structure accounting: with r_a = rank(A) and r_b = rank(B), the r
cosine/sine pairs split into three blocks,

    #{c_i = 1} = r - r_b,   #{0 < c_i < 1} = r_a + r_b - r,   #{c_i = 0} = r - r_a,

and the sine placement follows the bottom-aligned convention: the columns
of V carrying the nonzero-sine directions sit at the right end of V, with
the explicit `v_col_of` map recording where each v_i lives.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import matcore
from .errors import DimensionMismatch, InvalidDimensions, RankOutOfRange
from .matcore import Tolerance, as_matrix

__all__ = [
    "GsvdFactors",
    "CsStructure",
    "FundamentalBases",
    "gsvd_decompose",
    "structure_counts",
    "fundamental_subspaces",
    "compact",
    "expand",
    "rq_drilldown",
    "rank_reduce",
    "parameter_count",
    "with_top_convention",
]


@dataclass(frozen=True, eq=False)
class GsvdFactors:
    """Factors of [A; B] = [U C; V S] H plus placement metadata.

    c is descending and s ascending, both in [0, 1] with c_i^2 + s_i^2 = 1.
    Values in the infinite class are snapped to (c, s) = (1, 0) exactly and
    in the zero class to (0, 1) exactly, so structure counts are integers.
    `v_col_of[i]` is the column of v holding v_i, or -1 where s_i = 0.
    In compact format u is m1 x r_a and v is m2 x r_b (left-nullspace
    columns dropped).

    Ties among equal c_i keep the order delivered by the underlying SVD;
    the corresponding U/V blocks are only determined up to rotation within
    the tied subspace, though every derived quantity here is invariant.
    """

    u: np.ndarray
    v: np.ndarray
    c: np.ndarray
    s: np.ndarray
    h: np.ndarray
    r: int
    r_a: int
    r_b: int
    m1: int
    m2: int
    n: int
    v_col_of: np.ndarray
    compact: bool = False

    @property
    def n_infinite(self) -> int:
        return self.r - self.r_b

    @property
    def n_finite(self) -> int:
        return self.r_a + self.r_b - self.r

    @property
    def n_zero(self) -> int:
        return self.r - self.r_a

    def theta(self) -> np.ndarray:
        """Angles atan2(s_i, c_i) in [0, pi/2]; the infinity-safe value representation."""
        return np.arctan2(self.s, self.c)

    def cotangents(self) -> np.ndarray:
        """Generalized singular values c_i / s_i, np.inf where s_i = 0."""
        out = np.full(self.r, np.inf)
        nz = self.s > 0
        out[nz] = self.c[nz] / self.s[nz]
        return out

    def c_matrix(self) -> np.ndarray:
        rows = self.u.shape[1]
        cm = np.zeros((rows, self.r))
        k = min(rows, self.r)
        cm[np.arange(k), np.arange(k)] = self.c[:k]
        return cm

    def s_matrix(self) -> np.ndarray:
        rows = self.v.shape[1]
        sm = np.zeros((rows, self.r))
        for i in range(self.r):
            if self.v_col_of[i] >= 0:
                sm[self.v_col_of[i], i] = self.s[i]
            else:
                j = rows - self.r + i
                if j >= 0:
                    sm[j, i] = 0.0
        return sm

    def stacked_unit_basis(self) -> np.ndarray:
        """[U C; V S]: orthonormal columns spanning col([A; B])."""
        return np.vstack([self.u @ self.c_matrix(), self.v @ self.s_matrix()])

    def reconstruct(self) -> np.ndarray:
        """Rebuild the stacked pair [A; B] from the factors."""
        return self.stacked_unit_basis() @ self.h

    def u_dir(self, i: int) -> np.ndarray:
        """u_i: unit column-space direction for index i, zero vector when c_i = 0."""
        if self.c[i] > 0:
            return self.u[:, i].copy()
        return np.zeros(self.u.shape[0])

    def v_dir(self, i: int) -> np.ndarray:
        """v_i: unit column-space direction for index i, zero vector when s_i = 0."""
        if self.v_col_of[i] >= 0:
            return self.v[:, self.v_col_of[i]].copy()
        return np.zeros(self.v.shape[0])


@dataclass(frozen=True)
class CsStructure:
    """Block-column counts of C and S plus the zero-row counts."""

    n_infinite: int
    n_finite: int
    n_zero: int
    zero_rows_c: int
    zero_rows_s: int


@dataclass(frozen=True, eq=False)
class FundamentalBases:
    """Bases for the fundamental subspaces read off the factors.

    col_*/left_null_* and common_null have orthonormal columns; null_a and
    null_b concatenate pseudoinverse columns of H with the common nullspace
    and are linearly independent but not orthonormal.
    """

    col_a: np.ndarray
    col_b: np.ndarray
    left_null_a: np.ndarray
    left_null_b: np.ndarray
    row_ab: np.ndarray
    null_a: np.ndarray
    null_b: np.ndarray
    common_null: np.ndarray


def _reorthonormalize(cols: np.ndarray) -> np.ndarray:
    # cols is orthonormal up to roundoff; one QR pass pins it down without
    # reordering or mixing directions.
    if cols.shape[1] == 0:
        return cols
    q, r = np.linalg.qr(cols)
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def gsvd_decompose(a, b, tol: Tolerance = Tolerance()) -> GsvdFactors:
    """Compute the GH-form GSVD of the pair (a, b).

    Route: pivoted thin QR of the stacked pair gives [Qa; Qb] R with
    orthonormal columns; an SVD Qa = U C W' yields U and the cosines
    (singular values of an orthonormal-column submatrix lie in [0, 1]);
    the columns of Qb W are then exactly orthogonal with norms s_i, so V
    comes from normalizing them and completing the basis; H = W' R moved
    back to the original column order.

    The class sizes (how many c_i snap to 1 or 0) are fixed from the
    numerical ranks of a, b, and the stacked pair so the structure counts
    always agree with independently computed ranks.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[1]:
        raise DimensionMismatch(
            f"column counts differ: A has {a.shape[1]}, B has {b.shape[1]}"
        )
    m1, n = a.shape
    m2 = b.shape[0]
    stacked = np.vstack([a, b])

    # One cutoff for all three rank decisions, anchored at the scale of the
    # stacked pair: a block that is pure roundoff relative to the other is
    # rank zero here even though it is "full rank" at its own scale.
    sv_st = scipy.linalg.svdvals(stacked)
    smax = float(sv_st[0]) if sv_st.size else 0.0
    cut = tol.cutoff(stacked.shape, smax)
    r = int(np.count_nonzero(sv_st > cut))
    r_a = int(np.count_nonzero(scipy.linalg.svdvals(a) > cut))
    r_b = int(np.count_nonzero(scipy.linalg.svdvals(b) > cut))

    if r == 0:
        return GsvdFactors(
            u=np.eye(m1), v=np.eye(m2),
            c=np.zeros(0), s=np.zeros(0), h=np.zeros((0, n)),
            r=0, r_a=0, r_b=0, m1=m1, m2=m2, n=n,
            v_col_of=np.zeros(0, dtype=int),
        )

    q, rmat, perm = matcore.thin_qr(stacked, pivoted=True, tol=tol)
    if q.shape[1] > r:
        q, rmat = q[:, :r], rmat[:r, :]
    elif q.shape[1] < r:
        # QR diagonal saw a smaller rank than the SVD; use an SVD basis instead
        uu, sv, vv = matcore.full_svd(stacked)
        q = uu[:, :r]
        rmat = sv[:r, None] * vv[:, :r].T
        perm = np.arange(n)
    qa, qb = q[:m1], q[m1:]

    u, cos_raw, w = matcore.full_svd(qa)
    c = np.zeros(r)
    c[: cos_raw.size] = np.clip(cos_raw, 0.0, 1.0)

    qbw = qb @ w
    s = np.linalg.norm(qbw, axis=0)

    n_inf = r - r_b
    n_zero = r - r_a
    c[:n_inf] = 1.0
    s[:n_inf] = 0.0
    if n_zero:
        c[r - n_zero:] = 0.0
        s[r - n_zero:] = 1.0
    mid = slice(n_inf, r - n_zero)
    hyp = np.hypot(c[mid], s[mid])
    c[mid] /= hyp
    s[mid] /= hyp

    nz = np.arange(n_inf, r)
    denom = np.where(s[nz] > 0, s[nz], 1.0)
    vecs = _reorthonormalize(qbw[:, nz] / denom)
    v = np.hstack([matcore.complete_basis(vecs), vecs])
    v_col_of = np.full(r, -1, dtype=int)
    v_col_of[nz] = (m2 - r_b) + np.arange(r_b)

    h = w.T @ rmat
    h = h[:, np.argsort(perm)]

    return GsvdFactors(
        u=u, v=v, c=c, s=s, h=h,
        r=r, r_a=r_a, r_b=r_b, m1=m1, m2=m2, n=n,
        v_col_of=v_col_of,
    )


def structure_counts(f: GsvdFactors) -> CsStructure:
    """Block-column and zero-row counts determined by (r, r_a, r_b)."""
    return CsStructure(
        n_infinite=f.r - f.r_b,
        n_finite=f.r_a + f.r_b - f.r,
        n_zero=f.r - f.r_a,
        zero_rows_c=f.m1 - f.r_a,
        zero_rows_s=f.m2 - f.r_b,
    )


def fundamental_subspaces(f: GsvdFactors, a, b, tol: Tolerance = Tolerance()) -> FundamentalBases:
    """Extract bases for the fundamental subspaces of (a, b) from the factors.

    Column spaces and left nullspaces come from splitting the columns of U
    and V at the zero columns of C and S; nullspaces combine pseudoinverse
    columns of H (where C or S has a zero column) with the common nullspace,
    which is null(H), read from the RQ drilldown.
    """
    if f.compact:
        raise ValueError("fundamental_subspaces needs full-format factors")
    a = as_matrix(a)
    b = as_matrix(b)
    col_a = f.u[:, : f.r_a]
    left_null_a = f.u[:, f.r_a:]
    col_b = f.v[:, f.m2 - f.r_b:]
    left_null_b = f.v[:, : f.m2 - f.r_b]
    if f.r > 0:
        _, qfull = rq_drilldown(f)
        common_null = qfull[:, : f.n - f.r]
        hdag = matcore.pinv(f.h, tol)
    else:
        common_null = np.eye(f.n)
        hdag = np.zeros((f.n, 0))
    null_a = np.hstack([hdag[:, f.c == 0], common_null])
    null_b = np.hstack([hdag[:, f.s == 0], common_null])
    return FundamentalBases(
        col_a=col_a, col_b=col_b,
        left_null_a=left_null_a, left_null_b=left_null_b,
        row_ab=f.h.copy(),
        null_a=null_a, null_b=null_b,
        common_null=common_null,
    )


def compact(f: GsvdFactors) -> GsvdFactors:
    """Drop the zero rows of C and S and the matching columns of U and V.

    Keeps the column-space bases and the reconstruction property; the
    left-nullspace bases are gone.  Idempotent.
    """
    if f.compact:
        return f
    u = f.u[:, : f.r_a]
    v = f.v[:, f.m2 - f.r_b:]
    v_col_of = f.v_col_of.copy()
    v_col_of[v_col_of >= 0] -= f.m2 - f.r_b
    return dataclasses.replace(f, u=u, v=v, v_col_of=v_col_of, compact=True)


def expand(f: GsvdFactors):
    """Expanded format: (C_exp, S_exp, H_exp) with H_exp square nonsingular.

    C and S gain n - r zero columns; H gains n - r rows from an orthonormal
    basis of null(H), which makes H_exp invertible without touching the
    reconstruction [A; B] = [U C_exp; V S_exp] H_exp.
    """
    pad = f.n - f.r
    c_exp = np.hstack([f.c_matrix(), np.zeros((f.u.shape[1], pad))])
    s_exp = np.hstack([f.s_matrix(), np.zeros((f.v.shape[1], pad))])
    if pad == 0:
        return c_exp, s_exp, f.h.copy()
    if f.r == 0:
        return c_exp, s_exp, np.eye(f.n)
    null_h = matcore.nullspace_basis(f.h)
    h_exp = np.vstack([f.h, null_h.T])
    return c_exp, s_exp, h_exp


def rq_drilldown(f: GsvdFactors):
    """Write H = [0 R] Q' with R upper triangular r x r and Q orthogonal n x n.

    The first n - r columns of Q are an orthonormal basis for the common
    nullspace of A and B.  Signs are normalized (R diagonal nonnegative,
    leading entries of the nullspace columns nonnegative) for determinism.
    """
    if f.r == 0:
        return np.zeros((0, 0)), np.eye(f.n)
    rfac, qfac = scipy.linalg.rq(f.h, mode="full")
    t = rfac[:, f.n - f.r:].copy()
    q = qfac.T.copy()
    for j in range(f.r):
        if t[j, j] < 0:
            t[:, j] = -t[:, j]
            q[:, f.n - f.r + j] = -q[:, f.n - f.r + j]
    for j in range(f.n - f.r):
        col = q[:, j]
        idx = np.flatnonzero(np.abs(col) > 1e-12)
        if idx.size and col[idx[0]] < 0:
            q[:, j] = -col
    return t, q


def rank_reduce(f: GsvdFactors, a, b, k: int):
    """Keep the first k outer-product terms of [A; B] = sum_i g_i h_i'.

    Returns the rank-<=k pair (A_k, B_k); equals multiplying [A; B] on the
    right by the oblique projector H^+ I_{r,k} I_{r,k}' H.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != (f.m1, f.n) or b.shape != (f.m2, f.n):
        raise DimensionMismatch("matrix shapes do not match the factors")
    if not 0 <= k <= f.r:
        raise RankOutOfRange(f"k must be in [0, {f.r}], got {k}")
    g = f.stacked_unit_basis()
    approx = g[:, :k] @ f.h[:k, :]
    return approx[: f.m1], approx[f.m1:]


def parameter_count(m1: int, m2: int, n: int, r: int) -> dict:
    """Degree-of-freedom table for the factored form of an m x n rank-r pair.

    Splits the m*n parameters of [A; B] (m = m1 + m2) into the rank
    codimension, H, the nondegenerate angles, the two Stiefel blocks for
    the ellipse axes, and a Grassmann block; the total is always m*n.
    Entries depend on the ordering of r relative to m1 and m2.
    """
    for name, val in (("m1", m1), ("m2", m2), ("n", n), ("r", r)):
        if not isinstance(val, (int, np.integer)) or (val < 1 and name != "r"):
            raise InvalidDimensions(f"{name} must be a positive integer, got {val!r}")
    if not 0 < r <= min(m1 + m2, n):
        raise InvalidDimensions(
            f"need 0 < r <= min(m1 + m2, n) = {min(m1 + m2, n)}, got r = {r}"
        )
    swapped = m1 > m2
    lo, hi = (m2, m1) if swapped else (m1, m2)
    m = m1 + m2
    if r <= lo:
        regime = "r <= min(m1, m2)"
        angles = r
        lo_stiefel = (lo - r) * r + r * (r - 1) // 2
        hi_stiefel = (hi - r) * r + r * (r - 1) // 2
        grassmann = 0
        ra_gen, rb_gen = r, r
    elif r <= hi:
        regime = "min(m1, m2) <= r <= max(m1, m2)"
        angles = lo
        lo_stiefel = lo * (lo - 1) // 2
        hi_stiefel = (hi - lo) * lo + lo * (lo - 1) // 2
        grassmann = (r - lo) * (hi - r)
        ra_gen, rb_gen = lo, r
    else:
        regime = "max(m1, m2) <= r"
        angles = m - r
        lo_stiefel = (r - hi) * (m - r) + (m - r) * (m - r - 1) // 2
        hi_stiefel = (r - lo) * (m - r) + (m - r) * (m - r - 1) // 2
        grassmann = 0
        ra_gen, rb_gen = lo, hi
    u_stiefel, v_stiefel = (hi_stiefel, lo_stiefel) if swapped else (lo_stiefel, hi_stiefel)
    r_a, r_b = (rb_gen, ra_gen) if swapped else (ra_gen, rb_gen)
    counts = {
        "regime": regime,
        "rank_codim": (m - r) * (n - r),
        "h": r * n,
        "angles": angles,
        "u_stiefel": u_stiefel,
        "v_stiefel": v_stiefel,
        "grassmann": grassmann,
        "r_a_generic": r_a,
        "r_b_generic": r_b,
    }
    counts["total"] = (
        counts["rank_codim"] + counts["h"] + counts["angles"]
        + counts["u_stiefel"] + counts["v_stiefel"] + counts["grassmann"]
    )
    if counts["total"] != m * n:
        raise AssertionError("parameter count failed to total m*n")
    return counts


def with_top_convention(f: GsvdFactors) -> GsvdFactors:
    """Re-express V with the nonzero-sine columns on the left (top-aligned S)."""
    if f.compact:
        return f
    k = f.m2 - f.r_b
    v = np.hstack([f.v[:, k:], f.v[:, :k]])
    v_col_of = f.v_col_of.copy()
    v_col_of[v_col_of >= 0] -= k
    return dataclasses.replace(f, v=v, v_col_of=v_col_of)
