"""Leading-order spectrum for shrinking inclusions.

As the largest radius r tends to zero the eigenvalues behave like
lambda = r^2 mu + o(r^2), where mu runs over the spectrum of the n x n
matrix with entries conj(rho_m) nu_m / (1 - conj(a_m) a_k)^2.  This module
builds that matrix, solves for (mu, v), evaluates the leading-order
exterior potential, and computes the first-order coefficient correction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, DomainError
from .geometry import DiskConfig, validate
from .numerics import eig_complex_general, eig_hermitian

__all__ = [
    "SpectralMatrixF",
    "AsymptoticEigenpair",
    "build_F",
    "leading_spectrum",
    "leading_phi0",
    "first_order_alpha1",
]

#: Hermitian detection threshold, relative to the largest entry.
HERMITIAN_TOL = 1e-13


@dataclass(frozen=True)
class SpectralMatrixF:
    """The leading-order spectral matrix and its Hermitian flag.

    ``matrix[k, m] = conj(rho_m) * nu_m / (1 - conj(a_m) * a_k)**2`` so that
    the eigenproblem reads mu * v = matrix @ v in row-times-column
    convention (the iteration index is the column).
    """

    matrix: np.ndarray
    is_hermitian: bool

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class AsymptoticEigenpair:
    """One leading-order eigenpair: mu, its unit eigenvector, and the
    induced eigenvalue estimate lambda ~ r_max^2 * mu."""

    mu: complex
    v: np.ndarray
    lambda_estimate: complex
    order: int                # 1-based position in the |mu|-sorted spectrum
    residual: float = 0.0


def build_F(config: DiskConfig) -> SpectralMatrixF:
    """Assemble the leading-order spectral matrix for a configuration."""
    report = validate(config)
    if not report.ok:
        raise ConfigError("; ".join(str(v) for v in report.violations))
    a = config.centers
    weights = np.conj(config.contrasts) * config.nu
    denom = (1.0 - np.outer(a, np.conj(a))) ** 2
    F = weights[None, :] / denom
    dev = float(np.abs(F - F.conj().T).max())
    scale = float(np.abs(F).max())
    return SpectralMatrixF(matrix=F, is_hermitian=dev <= HERMITIAN_TOL * max(scale, 1e-300))


def leading_spectrum(config: DiskConfig) -> list[AsymptoticEigenpair]:
    """All n leading-order eigenpairs, sorted by nonincreasing |mu|.

    A Hermitian matrix (equal real contrasts, equal radii) goes through the
    Jacobi path and yields exactly n real mu; otherwise the general complex
    eigensolver is used.
    """
    F = build_F(config)
    dec = eig_hermitian(F.matrix) if F.is_hermitian else eig_complex_general(F.matrix)
    r2 = config.r_max**2
    pairs = []
    for j in range(F.n):
        mu = complex(dec.eigenvalues[j])
        pairs.append(
            AsymptoticEigenpair(
                mu=mu,
                v=dec.vectors[:, j].copy(),
                lambda_estimate=r2 * mu,
                order=j + 1,
                residual=float(dec.residuals[j]),
            )
        )
    return pairs


def leading_phi0(pair: AsymptoticEigenpair, config: DiskConfig):
    """Leading-order exterior potential as an evaluable function of z.

    phi0(z) = -r^2 sum_m rho_m nu_m conj(v_m) / (z - a_m), defined for
    |z| >= 1 and vanishing at infinity.  The returned callable accepts
    scalars or arrays and rejects points inside the unit disk.
    """
    a = config.centers
    coeff = -config.r_max**2 * config.contrasts * config.nu * np.conj(pair.v)

    def phi0(z):
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) < 1.0 - 1e-12):
            raise DomainError("leading phi0 is defined for |z| >= 1")
        out = (coeff[:, None] / (z.ravel()[None, :] - a[:, None])).sum(axis=0)
        out = out.reshape(z.shape)
        return out if out.ndim else complex(out)

    return phi0


def first_order_alpha1(pair: AsymptoticEigenpair, config: DiskConfig) -> np.ndarray:
    """First-order coefficient correction for a leading eigenpair.

    Requires mu != 0 (the correction divides by lambda = r^2 mu).
    """
    if pair.mu == 0:
        raise ValueError("first-order correction undefined for zero eigenvalue")
    a = config.centers
    rho = config.contrasts
    nu = config.nu
    r = config.r_max
    lam = r**2 * pair.mu
    v = pair.v
    n = config.n
    alpha1 = np.zeros(n, dtype=complex)
    for k in range(n):
        s1 = 0.0 + 0.0j
        for m in range(n):
            if m != k:
                s1 += rho[m] * nu[m] * np.conj(v[m]) / (a[k] - a[m]) ** 3
        s2 = np.sum(np.conj(rho) * nu * np.conj(a) * v / (1.0 - np.conj(a) * a[k]) ** 3)
        alpha1[k] = -2.0 * r**3 * s1 + (2.0 * r**3 / lam) * s2
    return alpha1
