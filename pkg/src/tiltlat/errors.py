"""Exception types shared across the package."""


class TiltlatError(Exception):
    """Base class for all package errors."""


class ConfigError(TiltlatError, ValueError):
    """Invalid parameter, configuration value, or config file (CLI exit code 2)."""


class WindowTooNarrow(ConfigError):
    """Site window cannot hold the requested state at the required accuracy."""


class OutOfRange(ConfigError):
    """Argument outside the supported numerical range."""


class ZeroTilt(ConfigError):
    """Operation requires a nonzero static tilt (dF > 0)."""


class BadTruncation(TiltlatError):
    """Series truncation would drop terms above the accuracy budget."""


class NumericalGuard(TiltlatError):
    """Base class for runtime guards tripped during integration (CLI exit code 3)."""


class EdgeContamination(NumericalGuard):
    """Probability reached the window edges; enlarge the window and rerun."""


class StepUnstable(NumericalGuard):
    """Norm drifted beyond tolerance within a run (blow-up or NaN)."""


class NotNormalized(ConfigError):
    """Density or state does not sum to one within tolerance."""


class WindowTooShort(ConfigError):
    """Time series too short for the requested fit window."""


class GridMismatch(ConfigError):
    """Two series do not share a common time grid or setup."""


class UnknownPreset(ConfigError):
    """Requested preset name does not exist."""
