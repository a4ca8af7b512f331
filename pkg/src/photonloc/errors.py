"""Exception types shared across the package."""


class PhotonlocError(Exception):
    """Base class for all package-specific errors."""


class ResolutionError(PhotonlocError):
    """A grid is too coarse to resolve the requested structure."""


class DegenerateSeedError(PhotonlocError):
    """The seed leads to parallel mode functions (eta = 1/2).

    Introducing a harmonic phase factor (a nonzero carrier wavenumber)
    always avoids this.
    """


class TruncationError(PhotonlocError):
    """A Fock-space cutoff is too small for the requested tolerance."""


class ConvergenceError(PhotonlocError):
    """A series or iterative evaluation failed to converge."""
