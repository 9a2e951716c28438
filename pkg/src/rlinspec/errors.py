"""Exception types shared across the package."""


class RlinspecError(Exception):
    """Base class for all package errors."""


class ConfigError(RlinspecError):
    """Invalid run configuration or inadmissible geometry."""


class NotHermitianError(RlinspecError):
    """Matrix handed to the Hermitian eigensolver is not Hermitian."""


class EigenConvergenceError(RlinspecError):
    """QR iteration stalled.  Carries iteration diagnostics."""

    def __init__(self, message, block=None, iterations=None, size=None):
        super().__init__(message)
        self.block = block
        self.iterations = iterations
        self.size = size


class IllConditionedError(RlinspecError):
    """Linear system is singular or too ill-conditioned to solve reliably."""

    def __init__(self, message, cond=None):
        super().__init__(message)
        self.cond = cond


class AnalyticityDefectError(RlinspecError):
    """Circle-sampling projection shows too much aliased high-frequency
    content: truncation degree or sample count too small, or disks nearly
    touching."""

    def __init__(self, message, defect=None, tol=None):
        super().__init__(message)
        self.defect = defect
        self.tol = tol


class DomainError(RlinspecError):
    """Evaluation point outside the domain of the requested potential."""


class RefinementExhaustedError(RlinspecError):
    """Adaptive curve refinement hit its sample cap without settling."""


class ZeroOnCurveError(RlinspecError):
    """Winding number undefined: the sampled map vanishes on the contour."""


class SamplingExhaustedError(RlinspecError):
    """Random-configuration rejection sampling exceeded its retry budget."""
