"""Taylor-coefficient extraction from uniform circle samples.

For f sampled at z_j = a + R exp(2*pi*i*j/P), the discrete Fourier sums
c_l = (1/P) sum_j f_j exp(-2*pi*i*l*j/P) approximate the Taylor
coefficients of f about a in the scaled variable (z - a)/R.  The top half
of the returned spectrum (l >= P/2) holds aliased negative/overflow modes;
its maximum modulus is the *analyticity defect* and is always reported:
for a function genuinely analytic past radius R it decays geometrically
with P.
"""

from __future__ import annotations

import numpy as np

_DFT_CACHE: dict[int, np.ndarray] = {}


def _dft_matrix(P: int) -> np.ndarray:
    W = _DFT_CACHE.get(P)
    if W is None:
        j = np.arange(P)
        W = np.exp(-2j * np.pi * np.outer(j, j) / P) / P
        _DFT_CACHE[P] = W
    return W


def _check_sample_count(P: int):
    if P < 2 or (P & (P - 1)) != 0:
        raise ValueError(f"sample count must be a power of two >= 2, got {P}")


def dft_project(samples):
    """Project circle samples onto Taylor coefficients.

    Returns (coeffs, defect): all P coefficients c_0..c_{P-1} plus the
    analyticity defect max(|c_l|, l >= P/2).
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim != 1:
        raise ValueError("dft_project expects a 1-d sample vector")
    P = samples.shape[0]
    _check_sample_count(P)
    c = _dft_matrix(P) @ samples
    defect = float(np.abs(c[P // 2 :]).max())
    return c, defect


def dft_project_batch(samples):
    """Batched variant: samples has shape (P, K), one circle per column.

    Returns (coeffs (P, K), defects (K,)).
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim != 2:
        raise ValueError("dft_project_batch expects a (P, K) sample matrix")
    P = samples.shape[0]
    _check_sample_count(P)
    C = _dft_matrix(P) @ samples
    defects = np.abs(C[P // 2 :, :]).max(axis=0) if samples.shape[1] else np.zeros(0)
    return C, defects
