# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled eigensolver kernels.

Same contracts as ``_kernels_py`` (the pure numpy twin); real input only.
Selected automatically at import when the extension was built.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

from ..errors import EigenConvergenceError

cnp.import_array()

cdef double _EPS = 2.220446049250313e-16
cdef double _TINY = 2.2250738585072014e-308


def hessenberg_reduce(A):
    """Householder reduction to upper Hessenberg form; returns (H, Q)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] H = np.array(A, dtype=np.float64, copy=True, order="C")
    cdef Py_ssize_t m = H.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] Q = np.eye(m, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v = np.zeros(m, dtype=np.float64)
    cdef Py_ssize_t k, i, j
    cdef double normx, alpha, vn, s, x0
    for k in range(m - 2):
        normx = 0.0
        for i in range(k + 1, m):
            normx += H[i, k] * H[i, k]
        normx = sqrt(normx)
        if normx == 0.0:
            continue
        x0 = H[k + 1, k]
        alpha = -normx if x0 >= 0.0 else normx
        vn = 0.0
        for i in range(k + 1, m):
            v[i] = H[i, k]
            vn += v[i] * v[i]
        v[k + 1] -= alpha
        vn += v[k + 1] * v[k + 1] - x0 * x0
        if vn <= 0.0:
            continue
        vn = sqrt(vn)
        for i in range(k + 1, m):
            v[i] /= vn
        # rows k+1.. of columns k..m-1
        for j in range(k, m):
            s = 0.0
            for i in range(k + 1, m):
                s += v[i] * H[i, j]
            s *= 2.0
            for i in range(k + 1, m):
                H[i, j] -= s * v[i]
        # columns k+1.. of all rows
        for i in range(m):
            s = 0.0
            for j in range(k + 1, m):
                s += H[i, j] * v[j]
            s *= 2.0
            for j in range(k + 1, m):
                H[i, j] -= s * v[j]
            s = 0.0
            for j in range(k + 1, m):
                s += Q[i, j] * v[j]
            s *= 2.0
            for j in range(k + 1, m):
                Q[i, j] -= s * v[j]
        H[k + 1, k] = alpha
        for i in range(k + 2, m):
            H[i, k] = 0.0
    return H, Q


def francis_eigvals(Hin, int maxiter_per_block=50):
    """Eigenvalues of a real upper-Hessenberg matrix; returns (w, sweeps)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2] H = np.array(Hin, dtype=np.float64, copy=True, order="C")
    cdef Py_ssize_t m = H.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] w = np.empty(m, dtype=np.complex128)
    if m == 0:
        return w, 0
    cdef double hscale = float(np.abs(H).max())
    if hscale == 0.0:
        w[:] = 0.0
        return w, 0
    cdef Py_ssize_t hi = m - 1
    cdef Py_ssize_t lo, mm, k, i, j, nr, rbot
    cdef int its = 0, total = 0
    cdef double tst, s, t, sx, h11, h12
    cdef double p, q, r, sc, normu, alpha, v0, vn2, beta, g
    cdef double tr, det, disc, sq, l1, l2
    cdef double v1, v2, v3
    while hi >= 0:
        if hi == 0:
            w[0] = H[0, 0]
            break
        lo = hi
        while lo > 0:
            tst = fabs(H[lo - 1, lo - 1]) + fabs(H[lo, lo])
            if tst == 0.0:
                tst = hscale
            if fabs(H[lo, lo - 1]) <= max(_EPS * tst, _TINY):
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            w[hi] = H[hi, hi]
            hi -= 1
            its = 0
            continue
        if lo == hi - 1:
            tr = 0.5 * (H[lo, lo] + H[hi, hi])
            det = H[lo, lo] * H[hi, hi] - H[lo, hi] * H[hi, lo]
            disc = tr * tr - det
            if disc >= 0.0:
                sq = sqrt(disc)
                l1 = tr + sq if tr >= 0.0 else tr - sq
                l2 = det / l1 if l1 != 0.0 else 0.0
                w[hi - 1] = l1
                w[hi] = l2
            else:
                sq = sqrt(-disc)
                w[hi - 1] = tr + 1j * sq
                w[hi] = tr - 1j * sq
            hi -= 2
            its = 0
            continue
        its += 1
        total += 1
        if its > maxiter_per_block:
            raise EigenConvergenceError(
                "QR iteration stalled on block [%d, %d] of a %dx%d Hessenberg "
                "matrix after %d sweeps (%d total)" % (lo, hi, m, m, its, total),
                block=(lo, hi),
                iterations=total,
                size=m,
            )
        if its % 10 == 0:
            sx = fabs(H[hi, hi - 1]) + fabs(H[hi - 1, hi - 2])
            h11 = 0.75 * sx + H[hi, hi]
            h12 = -0.4375 * sx
            s = h11 + h11
            t = h11 * h11 - h12 * sx
        else:
            s = H[hi - 1, hi - 1] + H[hi, hi]
            t = H[hi - 1, hi - 1] * H[hi, hi] - H[hi - 1, hi] * H[hi, hi - 1]
        mm = hi - 2
        p = q = r = 0.0
        while mm > lo:
            p = H[mm, mm] * (H[mm, mm] - s) + t + H[mm, mm + 1] * H[mm + 1, mm]
            q = H[mm + 1, mm] * (H[mm, mm] + H[mm + 1, mm + 1] - s)
            r = H[mm + 1, mm] * H[mm + 2, mm + 1]
            sc = fabs(p) + fabs(q) + fabs(r)
            if sc != 0.0:
                p /= sc
                q /= sc
                r /= sc
            if fabs(H[mm, mm - 1]) * (fabs(q) + fabs(r)) <= _EPS * fabs(p) * (
                fabs(H[mm - 1, mm - 1]) + fabs(H[mm, mm]) + fabs(H[mm + 1, mm + 1])
            ):
                break
            mm -= 1
        if mm == lo:
            p = H[lo, lo] * (H[lo, lo] - s) + t + H[lo, lo + 1] * H[lo + 1, lo]
            q = H[lo + 1, lo] * (H[lo, lo] + H[lo + 1, lo + 1] - s)
            r = H[lo + 1, lo] * H[lo + 2, lo + 1]
        for k in range(mm, hi):
            nr = 3 if hi - k + 1 >= 3 else 2
            if k > mm:
                p = H[k, k - 1]
                q = H[k + 1, k - 1]
                r = H[k + 2, k - 1] if nr == 3 else 0.0
            if nr == 2:
                r = 0.0
            normu = sqrt(p * p + q * q + r * r)
            if normu == 0.0:
                continue
            alpha = -normu if p >= 0.0 else normu
            v0 = p - alpha
            vn2 = v0 * v0 + q * q + r * r
            if vn2 == 0.0:
                continue
            beta = 2.0 / vn2
            v1 = v0
            v2 = q
            v3 = r if nr == 3 else 0.0
            if k > mm:
                H[k, k - 1] = alpha
                H[k + 1, k - 1] = 0.0
                if nr == 3:
                    H[k + 2, k - 1] = 0.0
            elif k > lo:
                H[k, k - 1] *= 1.0 - beta * v1 * v1
            # left reflection on rows k..k+nr-1, columns k..hi
            for j in range(k, hi + 1):
                g = v1 * H[k, j] + v2 * H[k + 1, j]
                if nr == 3:
                    g += v3 * H[k + 2, j]
                g *= beta
                H[k, j] -= g * v1
                H[k + 1, j] -= g * v2
                if nr == 3:
                    H[k + 2, j] -= g * v3
            # right reflection on columns k..k+nr-1, rows lo..min(k+3, hi)
            rbot = k + 3 if k + 3 < hi else hi
            for i in range(lo, rbot + 1):
                g = v1 * H[i, k] + v2 * H[i, k + 1]
                if nr == 3:
                    g += v3 * H[i, k + 2]
                g *= beta
                H[i, k] -= g * v1
                H[i, k + 1] -= g * v2
                if nr == 3:
                    H[i, k + 2] -= g * v3
    return w, total


def hess_shifted_lu(H, sigma):
    """Pivoted LU of (H - sigma*I) for upper-Hessenberg real H."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] U = np.array(H, dtype=np.complex128, copy=True, order="C")
    cdef Py_ssize_t m = U.shape[0]
    cdef cnp.ndarray[cnp.int8_t, ndim=1] piv = np.zeros(max(m - 1, 0), dtype=np.int8)
    cdef double complex sig = sigma
    cdef double small = max(_EPS * (float(np.abs(np.asarray(H)).max()) + abs(sig)), _TINY)
    cdef Py_ssize_t k, j
    cdef double complex mult, tmp
    for k in range(m):
        U[k, k] -= sig
    for k in range(m - 1):
        if abs(U[k + 1, k]) > abs(U[k, k]):
            piv[k] = 1
            for j in range(k, m):
                tmp = U[k, j]
                U[k, j] = U[k + 1, j]
                U[k + 1, j] = tmp
        if U[k, k] == 0.0:
            U[k, k] = small
        mult = U[k + 1, k] / U[k, k]
        U[k + 1, k] = mult
        for j in range(k + 1, m):
            U[k + 1, j] -= mult * U[k, j]
    if m > 0 and U[m - 1, m - 1] == 0.0:
        U[m - 1, m - 1] = small
    return U, piv


def hess_lu_solve(Uin, piv_in, b):
    """Solve with the factorization from hess_shifted_lu."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] U = Uin
    cdef cnp.ndarray[cnp.int8_t, ndim=1] piv = piv_in
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] y = np.array(b, dtype=np.complex128, copy=True)
    cdef Py_ssize_t m = U.shape[0]
    cdef Py_ssize_t k, i, j
    cdef double complex tmp, acc
    for k in range(m - 1):
        if piv[k]:
            tmp = y[k]
            y[k] = y[k + 1]
            y[k + 1] = tmp
        y[k + 1] -= U[k + 1, k] * y[k]
    for i in range(m - 1, -1, -1):
        acc = y[i]
        for j in range(i + 1, m):
            acc -= U[i, j] * y[j]
        y[i] = acc / U[i, i]
    return y
