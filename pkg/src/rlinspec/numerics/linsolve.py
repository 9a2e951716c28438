"""Dense LU solver with partial pivoting and a 1-norm condition estimate.

Self-contained (no library solver calls) so the whole realified operator
pipeline stays auditable.  Matrices here are small (a few hundred rows),
so the unblocked algorithm is plenty.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ..errors import IllConditionedError

_EPS = float(np.finfo(np.float64).eps)

COND_LIMIT = 1e12


class LinearSolution(NamedTuple):
    x: np.ndarray
    cond: float


def lu_factor(A):
    """Row-pivoted LU: returns (LU, perm) with the factors packed in LU and
    perm the sequence of row swaps (perm[k] = row swapped with k at step k)."""
    LU = np.array(A, copy=True)
    if LU.ndim != 2 or LU.shape[0] != LU.shape[1]:
        raise ValueError("lu_factor needs a square matrix")
    m = LU.shape[0]
    perm = np.arange(m)
    for k in range(m - 1):
        j = k + int(np.argmax(np.abs(LU[k:, k])))
        perm[k] = j
        if j != k:
            LU[[k, j], :] = LU[[j, k], :]
        if LU[k, k] != 0.0:
            LU[k + 1 :, k] /= LU[k, k]
            LU[k + 1 :, k + 1 :] -= np.outer(LU[k + 1 :, k], LU[k, k + 1 :])
    return LU, perm


def lu_solve(LU, perm, b, trans=False):
    """Solve A x = b (or A^T x = b with trans=True) given lu_factor output.
    ``b`` may be a vector or a matrix of stacked right-hand sides."""
    m = LU.shape[0]
    x = np.array(b, copy=True)
    if np.iscomplexobj(LU) and not np.iscomplexobj(x):
        x = x.astype(complex)
    vec = x.ndim == 1
    if vec:
        x = x[:, None]
    if not trans:
        for k in range(m - 1):
            j = perm[k]
            if j != k:
                x[[k, j], :] = x[[j, k], :]
            x[k + 1 :, :] -= np.outer(LU[k + 1 :, k], x[k, :])
        for i in range(m - 1, -1, -1):
            if i < m - 1:
                x[i, :] -= LU[i, i + 1 :] @ x[i + 1 :, :]
            x[i, :] /= LU[i, i]
    else:
        # A^T = (L U)^T P: forward with U^T, back with L^T, then unpermute
        for i in range(m):
            if i > 0:
                x[i, :] -= LU[:i, i] @ x[:i, :]
            x[i, :] /= LU[i, i]
        for i in range(m - 2, -1, -1):
            x[i, :] -= LU[i + 1 :, i] @ x[i + 1 :, :]
        for k in range(m - 2, -1, -1):
            j = perm[k]
            if j != k:
                x[[k, j], :] = x[[j, k], :]
    return x[:, 0] if vec else x


def _inv_norm1_estimate(LU, perm, m):
    """Hager-style lower estimate of ||A^{-1}||_1 from a handful of solves."""
    if m == 0:
        return 0.0
    x = np.full(m, 1.0 / m, dtype=LU.dtype)
    est = 0.0
    for _ in range(5):
        y = lu_solve(LU, perm, x)
        est = float(np.abs(y).sum())
        ay = np.abs(y)
        xi = np.where(ay > 0, y / np.where(ay > 0, ay, 1.0), 1.0)
        z = lu_solve(LU, perm, np.conj(xi), trans=True)
        z = np.conj(z)
        j = int(np.argmax(np.abs(z)))
        if np.abs(z[j]) <= np.real(z @ x):
            break
        x = np.zeros(m, dtype=LU.dtype)
        x[j] = 1.0
    return est


def condest(A, LU=None, perm=None):
    """1-norm condition estimate ||A||_1 * est(||A^{-1}||_1)."""
    A = np.asarray(A)
    m = A.shape[0]
    if LU is None:
        LU, perm = lu_factor(A)
    diag = np.abs(np.diagonal(LU))
    if m > 0 and diag.min() == 0.0:
        return np.inf
    anorm = float(np.abs(A).sum(axis=0).max()) if m else 0.0
    return anorm * _inv_norm1_estimate(LU, perm, m)


def solve_linear(M, b, cond_limit=COND_LIMIT):
    """Solve M x = b with a conditioning gate.

    Returns LinearSolution(x, cond); raises IllConditionedError when the
    estimated condition number exceeds ``cond_limit`` (default 1e12) or the
    matrix is outright singular.  One step of iterative refinement keeps the
    residual at the eps * ||M|| ||x|| level.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("solve_linear needs a square matrix")
    if not np.all(np.isfinite(M)):
        raise ValueError("solve_linear: non-finite matrix entries")
    LU, perm = lu_factor(M)
    cond = condest(M, LU, perm)
    if not np.isfinite(cond) or cond > cond_limit:
        raise IllConditionedError(
            f"matrix condition estimate {cond:.3e} exceeds limit {cond_limit:.1e}",
            cond=cond,
        )
    x = lu_solve(LU, perm, b)
    r = np.asarray(b) - M @ x
    mnorm = float(np.sqrt(np.sum(np.abs(M) ** 2)))
    if np.abs(r).max() > 100.0 * _EPS * mnorm * max(np.abs(x).max(), 1e-300):
        x = x + lu_solve(LU, perm, r)
    return LinearSolution(x=x, cond=float(cond))
