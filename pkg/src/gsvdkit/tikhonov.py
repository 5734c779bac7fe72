"""Tikhonov regularization through the two-cosine geometry.

For min_x ||A x - b||^2 + lambda^2 ||L x||^2 with A of full column rank,
take the compact GSVD of (A, L) once at lambda = 1.  The whole path then
has the closed form of a unit-hypotenuse triangle with fixed base and
sliding height:

    C_lam = C1 / sqrt(C1^2 + lam^2 S1^2),   S_lam = lam S1 / sqrt(C1^2 + lam^2 S1^2),

with H_lam = C_lam^{-1} H0 and the lambda-independent H0 = C1 H1 = C_lam H_lam
satisfying A = U H0.  The solution is

    x_lam = H0^{-1} C_lam^2 H0 x0,

x0 the plain least-squares solution: write x0 in the natural coordinates,
damp every direction by cos^2(theta_lam) = 1 / (1 + lam^2 tan^2(theta_1)),
come back.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import gsvd, matcore
from .errors import DimensionMismatch, SingularH
from .matcore import Tolerance, as_matrix, as_vector

__all__ = [
    "TikhonovProblem",
    "LambdaFactors",
    "base_factors",
    "lambda_factors",
    "solve_path",
    "direct_solve",
]


@dataclass(frozen=True, eq=False)
class TikhonovProblem:
    """Data (A, L, b) with A of full column rank; checked at construction."""

    a: np.ndarray
    l: np.ndarray
    b: np.ndarray

    def __init__(self, a, l, b, tol: Tolerance = Tolerance()):
        a = as_matrix(a)
        l = as_matrix(l)
        b = as_vector(b)
        if a.shape[1] != l.shape[1]:
            raise DimensionMismatch(
                f"A has {a.shape[1]} columns but L has {l.shape[1]}"
            )
        if b.size != a.shape[0]:
            raise DimensionMismatch(
                f"b has length {b.size}, expected {a.shape[0]}"
            )
        if matcore.numerical_rank(a, tol) < a.shape[1]:
            raise SingularH("A must have full column rank")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a.shape[1]


@dataclass(frozen=True, eq=False)
class LambdaFactors:
    """Per-lambda factors; h0 = C_lam @ h_lambda is the same for every lambda."""

    lam: float
    c_lambda: np.ndarray
    s_lambda: np.ndarray
    h_lambda: np.ndarray
    h0: np.ndarray

    def damping(self) -> np.ndarray:
        """cos^2(theta_lambda) per natural direction."""
        return self.c_lambda**2


def base_factors(p: TikhonovProblem, tol: Tolerance = Tolerance()) -> gsvd.GsvdFactors:
    """Compact GSVD of (A, L) at lambda = 1; r = n and every cosine is positive."""
    f = gsvd.compact(gsvd.gsvd_decompose(p.a, p.l, tol))
    if f.r < p.n or np.any(f.c <= 0):
        raise SingularH("base decomposition is rank deficient")
    return f


def lambda_factors(
    p: TikhonovProblem,
    lam: float,
    base: gsvd.GsvdFactors | None = None,
    tol: Tolerance = Tolerance(),
) -> LambdaFactors:
    """Closed-form factors of [A; lam L] scaled from the lambda = 1 anchor."""
    if lam < 0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    f = base if base is not None else base_factors(p, tol)
    denom = np.hypot(f.c, lam * f.s)
    c_lam = f.c / denom
    s_lam = lam * f.s / denom
    h0 = f.c[:, None] * f.h
    h_lam = denom[:, None] * f.h
    return LambdaFactors(lam=float(lam), c_lambda=c_lam, s_lambda=s_lam,
                         h_lambda=h_lam, h0=h0)


def solve_path(p: TikhonovProblem, lambdas, tol: Tolerance = Tolerance()):
    """Solve the whole lambda grid from one decomposition.

    Returns a list of (lambda, x_lambda, damping) with damping the
    per-direction cos^2(theta_lambda) factors in the H0 coordinates.
    """
    f = base_factors(p, tol)
    h0 = f.c[:, None] * f.h
    if matcore.numerical_rank(h0, tol) < p.n:
        raise SingularH("H0 is numerically singular")
    lu = scipy.linalg.lu_factor(h0)
    x0 = np.linalg.lstsq(p.a, p.b, rcond=None)[0]
    y0 = h0 @ x0
    out = []
    for lam in lambdas:
        if lam < 0:
            raise ValueError(f"lambda must be nonnegative, got {lam}")
        damp = f.c**2 / (f.c**2 + lam**2 * f.s**2)
        x = scipy.linalg.lu_solve(lu, damp * y0)
        out.append((float(lam), x, damp))
    return out


def direct_solve(p: TikhonovProblem, lam: float) -> np.ndarray:
    """Stacked least-squares reference: argmin ||[A; lam L] x - [b; 0]||."""
    if lam < 0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    stacked = np.vstack([p.a, lam * p.l])
    rhs = np.concatenate([p.b, np.zeros(p.l.shape[0])])
    return np.linalg.lstsq(stacked, rhs, rcond=None)[0]
