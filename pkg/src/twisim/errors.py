"""Exception types shared across the simulator.

The CLI maps these onto exit codes: parameter/shape/range problems exit 3,
file I/O and format problems exit 2, non-convergence exits 4.
"""


class SimulatorError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(SimulatorError, ValueError):
    """An argument lies outside its documented domain."""


class RangeError(ParameterError):
    """A signal value cannot be encoded (outside the allowed range)."""


class ShapeError(SimulatorError, ValueError):
    """Array dimensions are inconsistent with the requested operation."""


class CapacityError(ParameterError):
    """The comb does not provide enough wavelength channels."""


class FormatError(SimulatorError, ValueError):
    """A file does not match its declared on-disk format."""


class CalibrationError(SimulatorError, RuntimeError):
    """Spectral-shaping feedback failed to converge within its budget."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class TrainingError(SimulatorError, RuntimeError):
    """Training produced a non-finite loss."""
