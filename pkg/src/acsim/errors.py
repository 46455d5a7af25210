"""Exception hierarchy.

The CLI maps each family onto an exit code, see :data:`EXIT_CODES`.
"""


class ACSimError(Exception):
    """Base class for all simulator errors."""


class GeometryError(ACSimError):
    pass


class DegeneratePath(GeometryError):
    pass


class PathTooClose(GeometryError):
    """The path passes within the clearance tolerance of the center, so the
    winding number is undefined."""

    def __init__(self, clearance, eps):
        super().__init__(f"path clearance {clearance:.3e} <= {eps:.3e}; winding undefined")
        self.clearance = clearance
        self.eps = eps


class NonIntegerAngleSum(GeometryError):
    pass


class InvalidParameter(ACSimError, ValueError):
    pass


class QuantizationError(ACSimError):
    pass


class WindingOutOfRange(QuantizationError):
    pass


class PhaseNotQuantized(QuantizationError):
    def __init__(self, gate_index, nearest_n, residual):
        super().__init__(
            f"gate {gate_index}: phase is not an integer multiple of gamma0 "
            f"(nearest n={nearest_n}, residual={residual:.3e} rad)"
        )
        self.gate_index = gate_index
        self.nearest_n = nearest_n
        self.residual = residual


class SimulationError(ACSimError):
    pass


class LengthMismatch(SimulationError, ValueError):
    pass


class WidthMismatch(SimulationError, ValueError):
    pass


class IndexOutOfRange(SimulationError, IndexError):
    pass


class NotUnitary(ACSimError, ValueError):
    pass


class DimensionMismatch(ACSimError, ValueError):
    pass


class ParseError(ACSimError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


EXIT_CODES = (
    (ParseError, 2),
    (QuantizationError, 3),
    (GeometryError, 4),
)
