"""Dense eigendecompositions built on the in-repo kernels.

Three entry points:

* ``eig_hermitian``    -- complex Hermitian matrices, cyclic Jacobi.
* ``eig_real_general`` -- real general matrices: Hessenberg reduction +
  implicit double-shift QR for eigenvalues, Hessenberg inverse iteration
  for eigenvectors.  This is the hot path of the realified operator
  pipeline; its kernels have a compiled twin.
* ``eig_complex_general`` -- complex general matrices (used only for tiny
  leading-order spectral matrices): explicit shifted QR, pure numpy.

Eigenvalues are always sorted by nonincreasing modulus with ties broken by
nonincreasing real part, then nonincreasing imaginary part, and every pair
carries a backward-error residual ||M v - lambda v|| / ||M||_F.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EigenConvergenceError, NotHermitianError
from ._backend import BACKEND, kernels
from . import _kernels_py

_EPS = float(np.finfo(np.float64).eps)

__all__ = ["EigenDecomposition", "eig_hermitian", "eig_real_general", "eig_complex_general"]


@dataclass
class EigenDecomposition:
    """Eigenpairs sorted by nonincreasing |lambda|, with residuals.

    ``vectors[:, j]`` is the unit-norm eigenvector for ``eigenvalues[j]``;
    ``residuals[j] = ||M v_j - lambda_j v_j||_2 / ||M||_F``.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    residuals: np.ndarray
    iterations: int = 0


def _sort_order(w):
    return np.lexsort((-w.imag, -w.real, -np.abs(w)))


def _orient(v):
    """Deterministic representative: rotate the first significant component
    to the positive real axis (a sign flip for real vectors)."""
    av = np.abs(v)
    mx = av.max()
    if mx == 0.0:
        return v
    idx = int(np.argmax(av > 0.5 * mx))
    ph = v[idx] / abs(v[idx])
    return v * np.conj(ph)


def _norm(v):
    return float(np.sqrt(np.sum(np.abs(v) ** 2)))


def _finalize(M, w, V, iterations):
    fro = float(np.sqrt(np.sum(np.abs(M) ** 2)))
    res = np.empty(len(w))
    for j in range(len(w)):
        nv = _norm(V[:, j])
        if nv > 0:
            V[:, j] /= nv
        V[:, j] = _orient(V[:, j])
        res[j] = _norm(M @ V[:, j] - w[j] * V[:, j]) / fro if fro > 0 else 0.0
    order = _sort_order(w)
    return EigenDecomposition(
        eigenvalues=w[order],
        vectors=V[:, order],
        residuals=res[order],
        iterations=iterations,
    )


# ---------------------------------------------------------------------------
# Hermitian: cyclic complex Jacobi
# ---------------------------------------------------------------------------

def eig_hermitian(M, hermitian_tol=None, max_sweeps=60):
    """Eigendecomposition of a complex Hermitian matrix.

    Eigenvalues come out real (stored complex for interface uniformity) and
    the eigenvector matrix is unitary to machine precision.  Raises
    NotHermitianError if max|M - M^H| exceeds ``hermitian_tol``
    (default 1e-12 * max|M|).
    """
    A = np.array(M, dtype=complex, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("eig_hermitian needs a square matrix")
    m = A.shape[0]
    scale = float(np.abs(A).max()) if m else 0.0
    if hermitian_tol is None:
        hermitian_tol = 1e-12 * scale
    dev = float(np.abs(A - A.conj().T).max()) if m else 0.0
    if dev > hermitian_tol:
        raise NotHermitianError(
            f"max|M - M^H| = {dev:.3e} exceeds tolerance {hermitian_tol:.3e}"
        )
    A = 0.5 * (A + A.conj().T)
    V = np.eye(m, dtype=complex)
    Mwork = np.array(A)
    sweeps = 0
    if m > 1 and scale > 0.0:
        for sweeps in range(1, max_sweeps + 1):
            off = 0.0
            for p in range(m - 1):
                for q in range(p + 1, m):
                    apq = Mwork[p, q]
                    aapq = abs(apq)
                    off = max(off, aapq)
                    if aapq <= 1e2 * _EPS * scale / m:
                        continue
                    ephi = apq / aapq
                    app = Mwork[p, p].real
                    aqq = Mwork[q, q].real
                    tau = (aqq - app) / (2.0 * aapq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                    c = 1.0 / np.sqrt(1.0 + t * t)
                    s = t * c
                    # unitary plane rotation U: columns (p, q)
                    upp, upq = c, s
                    uqp, uqq = -s * np.conj(ephi), c * np.conj(ephi)
                    colp = Mwork[:, p].copy()
                    colq = Mwork[:, q].copy()
                    Mwork[:, p] = colp * upp + colq * uqp
                    Mwork[:, q] = colp * upq + colq * uqq
                    rowp = Mwork[p, :].copy()
                    rowq = Mwork[q, :].copy()
                    Mwork[p, :] = np.conj(upp) * rowp + np.conj(uqp) * rowq
                    Mwork[q, :] = np.conj(upq) * rowp + np.conj(uqq) * rowq
                    Mwork[p, q] = 0.0
                    Mwork[q, p] = 0.0
                    Mwork[p, p] = Mwork[p, p].real
                    Mwork[q, q] = Mwork[q, q].real
                    colp = V[:, p].copy()
                    colq = V[:, q].copy()
                    V[:, p] = colp * upp + colq * uqp
                    V[:, q] = colp * upq + colq * uqq
            if off <= 10.0 * _EPS * scale:
                break
        else:
            raise EigenConvergenceError(
                f"Jacobi sweeps did not converge in {max_sweeps} sweeps",
                iterations=max_sweeps,
                size=m,
            )
    w = np.diagonal(Mwork).real.astype(complex).copy()
    return _finalize(A, w, V, sweeps)


# ---------------------------------------------------------------------------
# Real general: Hessenberg + Francis QR + inverse iteration
# ---------------------------------------------------------------------------

def _cluster_groups(w, tol):
    """Indices grouped by eigenvalue proximity (for repeated eigenvalues)."""
    order = np.argsort(-np.abs(w), kind="stable")
    groups = []
    used = np.zeros(len(w), dtype=bool)
    for i in order:
        if used[i]:
            continue
        grp = [i]
        used[i] = True
        for j in order:
            if not used[j] and abs(w[j] - w[i]) <= tol:
                grp.append(j)
                used[j] = True
        groups.append(grp)
    return groups


def _inverse_iteration(H, Q, w, hess_lu, hess_solve, cluster_tol):
    """Eigenvectors of Q H Q^H for the computed eigenvalues ``w``.

    Inverse iteration on the Hessenberg form, with iterates of clustered
    (numerically repeated) eigenvalues orthogonalized against each other so
    multiple copies yield independent vectors.
    """
    m = H.shape[0]
    V = np.empty((m, len(w)), dtype=complex)
    conj_partner: dict[int, int] = {}
    # conjugate pairs of a real matrix: solve the Im > 0 one, conjugate
    pending = {}
    for j, wj in enumerate(w):
        if wj.imag < 0.0:
            key = complex(np.conj(wj))
            if key in pending:
                conj_partner[j] = pending[key].pop(0)
                if not pending[key]:
                    del pending[key]
                continue
        pending.setdefault(complex(wj), []).append(j)
    solve_idx = [j for j in range(len(w)) if j not in conj_partner]
    groups = _cluster_groups(w[solve_idx], cluster_tol)
    for grp in groups:
        prev = []
        for gi, local in enumerate(grp):
            j = solve_idx[local]
            U, piv = hess_lu(H, complex(w[j]))
            b = np.full(m, 1.0 / np.sqrt(m), dtype=complex)
            v = b
            for attempt in range(3):
                y = hess_solve(U, piv, b)
                for u in prev:
                    y = y - (np.conj(u) @ y) * u
                ny = _norm(y)
                if ny <= 1e3 * _EPS * _norm(b):
                    # iterate swallowed by the orthogonalization: restart
                    b = np.zeros(m, dtype=complex)
                    b[(gi + attempt) % m] = 1.0
                    continue
                v = y / ny
                b = v
            prev.append(v)
            V[:, j] = Q @ v
    for j, src in conj_partner.items():
        V[:, j] = np.conj(V[:, src])
    return V


def eig_real_general(M):
    """Eigendecomposition of a real general square matrix.

    Nonreal eigenvalues come in conjugate pairs; output is deterministic
    for identical input.  Raises EigenConvergenceError with iteration
    diagnostics if the QR iteration stalls.
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("eig_real_general needs a square matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("eig_real_general: non-finite matrix entries")
    m = A.shape[0]
    if m == 0:
        return EigenDecomposition(
            np.empty(0, complex), np.empty((0, 0), complex), np.empty(0), 0
        )
    if m == 1:
        return EigenDecomposition(
            np.array([complex(A[0, 0])]),
            np.ones((1, 1), dtype=complex),
            np.zeros(1),
            0,
        )
    H, Q = kernels.hessenberg_reduce(A)
    w, iterations = kernels.francis_eigvals(H)
    scale = float(np.sqrt(np.sum(H * H)))
    cluster_tol = 1e-11 * max(scale, 1.0e-30)
    V = _inverse_iteration(
        H, Q.astype(complex), w, kernels.hess_shifted_lu, kernels.hess_lu_solve,
        cluster_tol,
    )
    return _finalize(A, w, V, iterations)


# ---------------------------------------------------------------------------
# Complex general (small matrices): explicit shifted QR, pure numpy
# ---------------------------------------------------------------------------

def _complex_qr_eigvals(Hin, maxiter_per_block=80):
    H = np.array(Hin, dtype=complex, copy=True)
    m = H.shape[0]
    w = np.empty(m, dtype=complex)
    if m == 0:
        return w, 0
    hscale = float(np.abs(H).max())
    if hscale == 0.0:
        w[:] = 0.0
        return w, 0
    hi = m - 1
    its = 0
    total = 0
    while hi >= 0:
        if hi == 0:
            w[0] = H[0, 0]
            break
        lo = hi
        while lo > 0:
            tst = abs(H[lo - 1, lo - 1]) + abs(H[lo, lo])
            if tst == 0.0:
                tst = hscale
            if abs(H[lo, lo - 1]) <= _EPS * tst:
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            w[hi] = H[hi, hi]
            hi -= 1
            its = 0
            continue
        if lo == hi - 1:
            a, b = H[lo, lo], H[lo, hi]
            c, d = H[hi, lo], H[hi, hi]
            t = 0.5 * (a + d)
            disc = np.sqrt(t * t - (a * d - b * c))
            l1 = t + disc if abs(t + disc) >= abs(t - disc) else t - disc
            l2 = (a * d - b * c) / l1 if l1 != 0.0 else 0.0
            w[hi - 1], w[hi] = l1, l2
            hi -= 2
            its = 0
            continue
        its += 1
        total += 1
        if its > maxiter_per_block:
            raise EigenConvergenceError(
                f"complex QR stalled on block [{lo}, {hi}] after {its} sweeps",
                block=(lo, hi),
                iterations=total,
                size=m,
            )
        # Wilkinson shift: trailing 2x2 eigenvalue closest to H[hi, hi]
        a, b = H[hi - 1, hi - 1], H[hi - 1, hi]
        c, d = H[hi, hi - 1], H[hi, hi]
        t = 0.5 * (a + d)
        disc = np.sqrt(t * t - (a * d - b * c))
        sigma = t + disc if abs(t + disc - d) <= abs(t - disc - d) else t - disc
        if its % 15 == 0:
            sigma = sigma + abs(H[hi, hi - 1])
        # explicit QR step on the active block via Givens rotations
        nb = hi - lo + 1
        cs = np.empty(nb - 1, dtype=float)
        sn = np.empty(nb - 1, dtype=complex)
        blk = H[lo : hi + 1, lo : hi + 1]
        blk[np.diag_indices(nb)] -= sigma
        for j in range(nb - 1):
            f, g = blk[j, j], blk[j + 1, j]
            r = np.hypot(abs(f), abs(g))
            if r == 0.0:
                cs[j], sn[j] = 1.0, 0.0
                continue
            if f == 0.0:
                cs[j], sn[j] = 0.0, 1.0
            else:
                cs[j] = abs(f) / r
                sn[j] = (f / abs(f)) * np.conj(g) / r
            rowa = blk[j, j:].copy()
            rowb = blk[j + 1, j:].copy()
            blk[j, j:] = cs[j] * rowa + sn[j] * rowb
            blk[j + 1, j:] = -np.conj(sn[j]) * rowa + cs[j] * rowb
        for j in range(nb - 1):
            cola = blk[: min(j + 2, nb), j].copy()
            colb = blk[: min(j + 2, nb), j + 1].copy()
            blk[: min(j + 2, nb), j] = cola * cs[j] + colb * np.conj(sn[j])
            blk[: min(j + 2, nb), j + 1] = -cola * sn[j] + colb * cs[j]
        blk[np.diag_indices(nb)] += sigma
    return w, total


def eig_complex_general(M):
    """Eigendecomposition of a complex general square matrix (pure path;
    intended for small leading-order matrices)."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("eig_complex_general needs a square matrix")
    if not np.all(np.isfinite(A)):
        raise ValueError("eig_complex_general: non-finite matrix entries")
    m = A.shape[0]
    if m == 0:
        return EigenDecomposition(
            np.empty(0, complex), np.empty((0, 0), complex), np.empty(0), 0
        )
    if m == 1:
        return EigenDecomposition(
            np.array([complex(A[0, 0])]), np.ones((1, 1), complex), np.zeros(1), 0
        )
    H, Q = _kernels_py.hessenberg_reduce(A)
    w, iterations = _complex_qr_eigvals(H)
    scale = float(np.sqrt(np.sum(np.abs(H) ** 2)))
    V = _inverse_iteration(
        H, Q, w, _kernels_py.hess_shifted_lu, _kernels_py.hess_lu_solve,
        1e-11 * max(scale, 1e-30),
    )
    return _finalize(A, w, V, iterations)
