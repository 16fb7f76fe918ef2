class AxialError(Exception):
    """Root of every error raised by the engine."""
    pass


class ScalarModeError(AxialError):
    """Rational and symbolic scalars were mixed in one operation."""
    pass


class PoleError(AxialError):
    """A rational function was evaluated at a zero of its denominator."""
    pass


class ScalarParseError(AxialError, ValueError):
    pass
