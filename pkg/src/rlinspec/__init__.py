"""Eigenvalues of the R-linear conjugation problem for circular inclusions.

Solver library plus CLI for the spectral problem on a unit disk containing
non-overlapping circular inclusions: a leading-order solver for vanishing
radii, a Taylor-collocation solver for the full problem, reconstruction of
the exterior coating map, and an empirical harness for the winding-number
and nodal-domain conjecture.
"""

__version__ = "0.1.0"

from . import analysis, asymptotic, cli, fullsolver, geometry, numerics  # noqa: F401
from .geometry import Disk, DiskConfig, validate  # noqa: F401
