"""Problem geometry: circular inclusions in the unit disk.

A problem instance is a collection of non-overlapping disks |z - a_k| < r_k
strictly inside |z| < 1, each carrying a complex contrast rho_k with
|rho_k| < 1.  The elementary conformal maps used by every operator
(inversion in a circle, the Moebius composition map, inversion in the unit
circle) live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Disk",
    "DiskConfig",
    "Violation",
    "ValidationReport",
    "validate",
    "invert_in_disk",
    "mobius_w",
    "invert_in_unit_circle",
]

#: Minimum slack on the strict geometric inequalities.  Operator norms blow
#: up as disks touch, so configurations closer than this are rejected.
DEFAULT_MARGIN = 1e-9


@dataclass(frozen=True)
class Disk:
    """One circular inclusion: center, radius and material contrast."""

    center: complex
    radius: float
    contrast: complex = 0.0

    def __post_init__(self):
        if not np.isfinite(self.radius) or self.radius <= 0.0:
            raise ValueError(f"disk radius must be positive, got {self.radius}")
        if not (abs(self.contrast) < 1.0):
            raise ValueError(
                f"disk contrast must satisfy |contrast| < 1, got |{self.contrast}| = "
                f"{abs(self.contrast)}"
            )


@dataclass(frozen=True)
class DiskConfig:
    """An ordered collection of disks defining one problem instance.

    Derived quantities: ``r_max`` is the largest radius and ``nu[k] =
    r_k**2 / r_max**2`` the squared radius ratios (all in (0, 1], with 1
    attained for at least one disk).
    """

    disks: tuple[Disk, ...]

    def __init__(self, disks):
        object.__setattr__(self, "disks", tuple(disks))
        if len(self.disks) < 1:
            raise ValueError("a configuration needs at least one disk")

    @property
    def n(self) -> int:
        return len(self.disks)

    @property
    def centers(self) -> np.ndarray:
        return np.array([d.center for d in self.disks], dtype=complex)

    @property
    def radii(self) -> np.ndarray:
        return np.array([d.radius for d in self.disks], dtype=float)

    @property
    def contrasts(self) -> np.ndarray:
        return np.array([d.contrast for d in self.disks], dtype=complex)

    @property
    def r_max(self) -> float:
        return float(self.radii.max())

    @property
    def nu(self) -> np.ndarray:
        r = self.radii
        return (r / r.max()) ** 2


@dataclass(frozen=True)
class Violation:
    """One violated admissibility inequality, with the remaining slack."""

    kind: str          # "inside_unit_disk" | "overlap"
    disks: tuple       # offending disk index or index pair
    message: str
    slack: float       # value of the strict inequality margin (negative = crossed)

    def __str__(self):
        return self.message


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.ok


def validate(config: DiskConfig, margin: float = DEFAULT_MARGIN) -> ValidationReport:
    """Check the admissibility of a configuration.

    Every disk must lie strictly inside the unit disk (|a_k| + r_k < 1) and
    disks must be pairwise disjoint (|a_k - a_m| > r_k + r_m), both with
    slack of at least ``margin``.  Returns a report; never raises.
    """
    violations = []
    a = config.centers
    r = config.radii
    for k in range(config.n):
        slack = 1.0 - (abs(a[k]) + r[k])
        if slack < margin:
            violations.append(
                Violation(
                    kind="inside_unit_disk",
                    disks=(k,),
                    message=(
                        f"disk {k} not strictly inside the unit disk: "
                        f"|a|+r = {abs(a[k]) + r[k]:.17g} >= 1 - {margin:g}"
                    ),
                    slack=slack,
                )
            )
    for k in range(config.n):
        for m in range(k + 1, config.n):
            slack = abs(a[k] - a[m]) - (r[k] + r[m])
            if slack < margin:
                violations.append(
                    Violation(
                        kind="overlap",
                        disks=(k, m),
                        message=(
                            f"disks {k} and {m} overlap or touch: "
                            f"|a_k - a_m| = {abs(a[k] - a[m]):.17g} <= "
                            f"r_k + r_m + {margin:g} = {r[k] + r[m] + margin:.17g}"
                        ),
                        slack=slack,
                    )
                )
    return ValidationReport(ok=not violations, violations=tuple(violations))


def invert_in_disk(z, d: Disk):
    """Inversion z* = r^2 / conj(z - a) + a with respect to the circle of ``d``.

    Fixes the circle |z - a| = r pointwise and is an involution.  Accepts a
    scalar or ndarray ``z``; raises on the pole z = a.
    """
    z = np.asarray(z, dtype=complex)
    w = z - d.center
    if np.any(w == 0):
        raise ZeroDivisionError("inversion pole: z equals the disk center")
    out = d.radius**2 / np.conj(w) + d.center
    return out if out.ndim else complex(out)


def mobius_w(z, d: Disk):
    """The composition map w(z) = a + r^2 z / (1 - conj(a) z).

    Maps the closed unit disk into the closed disk of ``d``; equals
    ``invert_in_disk(1/conj(z), d)`` wherever both are defined.
    """
    z = np.asarray(z, dtype=complex)
    den = 1.0 - np.conj(d.center) * z
    if np.any(den == 0):
        raise ZeroDivisionError("moebius pole: z = 1/conj(a)")
    out = d.center + d.radius**2 * z / den
    return out if out.ndim else complex(out)


def invert_in_unit_circle(z):
    """Inversion 1/conj(z) in the unit circle (|result| = 1/|z|, same argument)."""
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ZeroDivisionError("inversion pole at z = 0")
    out = 1.0 / np.conj(z)
    return out if out.ndim else complex(out)
