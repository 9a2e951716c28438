"""Self-contained dense linear algebra and Fourier projection kernels.

Nothing here knows about the inclusion problem; both solvers sit on top of
this module.  The eigensolver kernels exist twice -- a compiled extension
and a pure numpy twin -- selected at import time (``BACKEND`` says which
one won; set ``RLINSPEC_BACKEND=pure|compiled`` to force a choice).
"""

from ._backend import BACKEND
from .eig import (
    EigenDecomposition,
    eig_complex_general,
    eig_hermitian,
    eig_real_general,
)
from .fourier import dft_project, dft_project_batch
from .linsolve import LinearSolution, condest, lu_factor, lu_solve, solve_linear

__all__ = [
    "BACKEND",
    "EigenDecomposition",
    "eig_hermitian",
    "eig_real_general",
    "eig_complex_general",
    "solve_linear",
    "LinearSolution",
    "condest",
    "lu_factor",
    "lu_solve",
    "dft_project",
    "dft_project_batch",
]
