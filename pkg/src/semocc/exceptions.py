"""Exception types shared across the package."""


class SemoccError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(SemoccError, ValueError):
    """Operands have inconsistent or unsupported shapes."""


class NonFiniteError(SemoccError, FloatingPointError):
    """A forward operation produced NaN or Inf."""


class ConfigError(SemoccError, ValueError):
    """Invalid or unknown configuration values."""


class DatasetFormatError(SemoccError, IOError):
    """Dataset file is corrupt, truncated, or has a bad header."""


class CheckpointError(SemoccError, IOError):
    """Checkpoint file is corrupt or incompatible."""
