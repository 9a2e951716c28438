"""Pure numpy implementations of the eigensolver kernels.

These are the fallback twins of the compiled kernels in ``_kernels_cy``;
both expose the same four functions with identical contracts, and the
backend is picked at import time (see ``_backend``).  The algorithms are
the classic unblocked ones: Householder reduction to Hessenberg form, the
implicit double-shift QR iteration with deflation for eigenvalues, and a
pivoted LU of a shifted Hessenberg matrix for inverse iteration.
"""

from __future__ import annotations

import numpy as np

from ..errors import EigenConvergenceError

_EPS = float(np.finfo(np.float64).eps)
_TINY = float(np.finfo(np.float64).tiny)


def hessenberg_reduce(A):
    """Householder reduction to upper Hessenberg form.

    Returns (H, Q) with A = Q H Q^H, Q unitary.  Accepts real or complex
    input; the compiled twin only handles the real case.
    """
    A = np.asarray(A)
    m = A.shape[0]
    dtype = complex if np.iscomplexobj(A) else float
    H = np.array(A, dtype=dtype, copy=True, order="C")
    Q = np.eye(m, dtype=dtype)
    for k in range(m - 2):
        x = H[k + 1 :, k]
        normx = np.sqrt(float(np.sum(np.abs(x) ** 2)))
        if normx == 0.0:
            continue
        x0 = x[0]
        phase = x0 / abs(x0) if x0 != 0.0 else 1.0
        alpha = -phase * normx
        v = x.copy()
        v[0] -= alpha
        vn = np.sqrt(float(np.sum(np.abs(v) ** 2)))
        if vn == 0.0:
            continue
        v /= vn
        # similarity H <- P H P with P = I - 2 v v^H acting on rows/cols k+1:
        H[k + 1 :, k:] -= 2.0 * np.outer(v, np.conj(v) @ H[k + 1 :, k:])
        H[:, k + 1 :] -= 2.0 * np.outer(H[:, k + 1 :] @ v, np.conj(v))
        Q[:, k + 1 :] -= 2.0 * np.outer(Q[:, k + 1 :] @ v, np.conj(v))
        H[k + 1, k] = alpha
        H[k + 2 :, k] = 0.0
    return H, Q


def _eig2x2(a, b, c, d):
    """Eigenvalues of the real 2x2 block [[a, b], [c, d]]."""
    t = 0.5 * (a + d)
    det = a * d - b * c
    disc = t * t - det
    if disc >= 0.0:
        s = np.sqrt(disc)
        l1 = t + s if t >= 0.0 else t - s
        l2 = det / l1 if l1 != 0.0 else 0.0
        return complex(l1), complex(l2)
    s = np.sqrt(-disc)
    return complex(t, s), complex(t, -s)


def francis_eigvals(Hin, maxiter_per_block=50):
    """Eigenvalues of a real upper-Hessenberg matrix.

    Implicit double-shift QR with deflation; exceptional shifts every 10
    stalled iterations.  Returns (eigenvalues, sweep_count); raises
    EigenConvergenceError with block diagnostics if a block refuses to
    deflate, rather than silently truncating.
    """
    H = np.array(Hin, dtype=float, copy=True, order="C")
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
        # trailing unreduced block [lo..hi]
        lo = hi
        while lo > 0:
            tst = abs(H[lo - 1, lo - 1]) + abs(H[lo, lo])
            if tst == 0.0:
                tst = hscale
            if abs(H[lo, lo - 1]) <= max(_EPS * tst, _TINY):
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            w[hi] = H[hi, hi]
            hi -= 1
            its = 0
            continue
        if lo == hi - 1:
            w[hi - 1], w[hi] = _eig2x2(H[lo, lo], H[lo, hi], H[hi, lo], H[hi, hi])
            hi -= 2
            its = 0
            continue
        its += 1
        total += 1
        if its > maxiter_per_block:
            raise EigenConvergenceError(
                f"QR iteration stalled on block [{lo}, {hi}] of a {m}x{m} "
                f"Hessenberg matrix after {its} sweeps ({total} total)",
                block=(lo, hi),
                iterations=total,
                size=m,
            )
        if its % 10 == 0:
            # exceptional shift built from the trailing subdiagonals
            sx = abs(H[hi, hi - 1]) + abs(H[hi - 1, hi - 2])
            h11 = 0.75 * sx + H[hi, hi]
            h12 = -0.4375 * sx
            s = h11 + h11
            t = h11 * h11 - h12 * sx
        else:
            s = H[hi - 1, hi - 1] + H[hi, hi]
            t = H[hi - 1, hi - 1] * H[hi, hi] - H[hi - 1, hi] * H[hi, hi - 1]
        # start column: look for two consecutive small subdiagonals so the
        # sweep can begin mid-block without disturbing the rest
        mm = hi - 2
        p = q = r = 0.0
        while mm > lo:
            p = H[mm, mm] * (H[mm, mm] - s) + t + H[mm, mm + 1] * H[mm + 1, mm]
            q = H[mm + 1, mm] * (H[mm, mm] + H[mm + 1, mm + 1] - s)
            r = H[mm + 1, mm] * H[mm + 2, mm + 1]
            sc = abs(p) + abs(q) + abs(r)
            if sc != 0.0:
                p, q, r = p / sc, q / sc, r / sc
            if abs(H[mm, mm - 1]) * (abs(q) + abs(r)) <= _EPS * abs(p) * (
                abs(H[mm - 1, mm - 1]) + abs(H[mm, mm]) + abs(H[mm + 1, mm + 1])
            ):
                break
            mm -= 1
        if mm == lo:
            p = H[lo, lo] * (H[lo, lo] - s) + t + H[lo, lo + 1] * H[lo + 1, lo]
            q = H[lo + 1, lo] * (H[lo, lo] + H[lo + 1, lo + 1] - s)
            r = H[lo + 1, lo] * H[lo + 2, lo + 1]
        # bulge chase
        for k in range(mm, hi):
            nr = min(3, hi - k + 1)
            if k > mm:
                p = H[k, k - 1]
                q = H[k + 1, k - 1]
                r = H[k + 2, k - 1] if nr == 3 else 0.0
            if nr == 2:
                r = 0.0
            normu = np.sqrt(p * p + q * q + r * r)
            if normu == 0.0:
                continue
            alpha = -normu if p >= 0.0 else normu
            v0 = p - alpha
            vn2 = v0 * v0 + q * q + r * r
            if vn2 == 0.0:
                continue
            beta = 2.0 / vn2
            v = np.array([v0, q, r][:nr])
            if k > mm:
                H[k, k - 1] = alpha
                H[k + 1, k - 1] = 0.0
                if nr == 3:
                    H[k + 2, k - 1] = 0.0
            elif k > lo:
                # starting mid-block: spill below is negligible by the
                # look-ahead criterion, only the subdiagonal entry survives
                H[k, k - 1] *= 1.0 - beta * v0 * v0
            seg = H[k : k + nr, k : hi + 1]
            seg -= beta * np.outer(v, v @ seg)
            rbot = min(k + 3, hi)
            seg2 = H[lo : rbot + 1, k : k + nr]
            seg2 -= beta * np.outer(seg2 @ v, v)
    return w, total


def hess_shifted_lu(H, sigma):
    """Pivoted LU of (H - sigma*I) for upper-Hessenberg H.

    Zero pivots are replaced by eps * scale so inverse iteration never
    breaks down.  Returns (U, piv) where U holds the upper factor with the
    single multiplier per column stored on the subdiagonal, and piv[k] = 1
    marks an adjacent row swap at step k.
    """
    H = np.asarray(H)
    m = H.shape[0]
    U = np.array(H, dtype=complex, copy=True, order="C")
    idx = np.arange(m)
    U[idx, idx] -= sigma
    piv = np.zeros(max(m - 1, 0), dtype=np.int8)
    small = max(_EPS * (float(np.abs(H).max()) + abs(sigma)), _TINY)
    for k in range(m - 1):
        if abs(U[k + 1, k]) > abs(U[k, k]):
            piv[k] = 1
            U[[k, k + 1], k:] = U[[k + 1, k], k:]
        if U[k, k] == 0.0:
            U[k, k] = small
        mult = U[k + 1, k] / U[k, k]
        U[k + 1, k] = mult
        U[k + 1, k + 1 :] -= mult * U[k, k + 1 :]
    if m > 0 and U[m - 1, m - 1] == 0.0:
        U[m - 1, m - 1] = small
    return U, piv


def hess_lu_solve(U, piv, b):
    """Solve with the factorization from hess_shifted_lu."""
    m = U.shape[0]
    y = np.array(b, dtype=complex, copy=True)
    for k in range(m - 1):
        if piv[k]:
            y[k], y[k + 1] = y[k + 1], y[k]
        y[k + 1] -= U[k + 1, k] * y[k]
    for i in range(m - 1, -1, -1):
        if i < m - 1:
            y[i] -= U[i, i + 1 :] @ y[i + 1 :]
        y[i] /= U[i, i]
    return y
