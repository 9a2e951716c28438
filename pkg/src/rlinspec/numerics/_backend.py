"""Kernel backend selection.

The compiled extension is preferred when present; the pure numpy twin is
the fallback.  ``RLINSPEC_BACKEND=pure`` forces the fallback and
``RLINSPEC_BACKEND=compiled`` makes a missing extension a hard error
(useful in benchmarks and CI).
"""

import os

from . import _kernels_py

_requested = os.environ.get("RLINSPEC_BACKEND", "auto").strip().lower()

if _requested not in ("auto", "pure", "compiled"):
    raise ValueError(f"RLINSPEC_BACKEND must be auto|pure|compiled, got {_requested!r}")

if _requested == "pure":
    kernels = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _compiled

        kernels = _compiled
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        kernels = _kernels_py
        BACKEND = "pure"
