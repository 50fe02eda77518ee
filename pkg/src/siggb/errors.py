"""Exception types shared across the package."""


class SiggbError(Exception):
    """Base class for everything raised deliberately by this package."""


class DimensionError(SiggbError):
    """Operands belong to different rings or have mismatched lengths."""


class DivisibilityError(SiggbError):
    """Exact monomial division was requested but does not exist."""


class EmptyPolynomialError(SiggbError):
    """The zero polynomial has no lead term."""


class ConfigError(SiggbError):
    """An engine configuration combines options that make no sense together."""


class CapExceededError(SiggbError):
    """The main loop hit its iteration cap before the queue drained."""


class SoundnessError(SiggbError):
    """A tracked module vector stopped matching its polynomial or signature."""


class SizeGuardError(SiggbError):
    """A verification helper was asked to handle more than it is rated for."""


class ProblemParseError(SiggbError):
    """Problem file rejected; carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
