"""Exception types shared across the package.

The CLI maps these onto exit codes: config/input problems -> 2,
numeric failures -> 3, calibration/metric failures -> 4.
"""


class RiskGraphError(Exception):
    """Base class for all errors raised by this package."""


class GraphIngestError(RiskGraphError):
    """Malformed edge list or node table input."""


class ShapeError(RiskGraphError):
    """Array dimensions do not match the operation's contract."""


class ConfigError(RiskGraphError):
    """Invalid configuration value or violated invariant."""


class NumericError(RiskGraphError):
    """Non-finite value produced where a finite one is required."""


class CalibrationError(RiskGraphError):
    """Threshold calibration cannot proceed (e.g. empty normal set)."""


class MetricError(RiskGraphError):
    """Metric undefined for the given inputs (e.g. single-class labels)."""


class CheckpointError(RiskGraphError):
    """Checkpoint file is corrupt, truncated, or incompatible."""
