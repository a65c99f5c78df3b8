"""Exception types raised by photonframe."""


class PhotonFrameError(Exception):
    """Base class for all library errors."""


class DomainError(PhotonFrameError, ValueError):
    """A boost velocity outside the open interval (-1, 1)."""


class ConfigurationError(PhotonFrameError, ValueError):
    """An invalid quadrature plan, grid or sweep configuration."""


class ConsistencyError(PhotonFrameError, ValueError):
    """Inputs that describe different physical objects."""


class DegenerateFitError(PhotonFrameError, ValueError):
    """Too few distinct frequencies to test proportionality."""


class WaveEvaluationError(PhotonFrameError, ArithmeticError):
    """A wave profile produced non-finite samples."""
