"""Exception types shared across the package."""


class CavitySplitError(Exception):
    """Base class for all validation and numerical failures."""


class TruncationTooSmall(CavitySplitError):
    """The Fock-space cutoff cannot hold the requested state; raise n_max."""


class DimensionMismatch(CavitySplitError):
    """Operands live in different truncations or incompatible bases."""


class ZeroField(CavitySplitError):
    """An operation that needs a nonzero mean photon number got n_bar = 0."""


class FieldTooSmall(CavitySplitError):
    """The mesoscopic approximation or preparation is meaningless at this n_bar."""


class StepTooLarge(CavitySplitError):
    """Halved-step verification of the fixed-step integrator failed."""


class FitDidNotConverge(CavitySplitError):
    """Nonlinear peak fit exceeded its iteration budget or residual bound."""


class PeakCountMismatch(CavitySplitError):
    """Detected local maxima disagree with the expected peak count."""


class ZeroProbabilityOutcome(CavitySplitError):
    """Conditioning on a detection outcome that has vanishing probability."""


class UsageError(CavitySplitError):
    """Bad configuration key, malformed value, or inconsistent timeline."""
