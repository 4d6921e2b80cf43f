"""Exception types shared across the package."""


class RhokitError(Exception):
    """Base class for all rhokit errors."""


class GraphSpecError(RhokitError, ValueError):
    """Malformed graph spec text. Carries the offset of the first bad character."""

    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)
        self.text = text
        self.position = position


class DomainError(RhokitError, ValueError):
    """Input outside the mathematical domain of the operation."""


class EnumerationCapError(RhokitError, RuntimeError):
    """Enumeration would exceed the configured cap and no cheap
    contraction order was found."""


class DegenerateDensityError(RhokitError, ValueError):
    """A density hit 0 or 1 where a log-ratio was required."""


class DiscrepancyError(RhokitError, RuntimeError):
    """A numerical result contradicts a proven bound; indicates an engine bug."""
