"""Exception types shared across the package."""


class ReflectError(Exception):
    """Base class for package errors."""


class InputError(ReflectError):
    """Malformed instance data or unusable query points."""


class InternalInconsistency(ReflectError):
    """An internal invariant failed; indicates a bug, not bad input."""


class BudgetExceeded(ReflectError):
    """An oracle or search exceeded its configured work budget."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ExtractionFailed(ReflectError):
    """Backward path extraction could not realize a turning point."""


class LayerCapExceeded(ReflectError):
    """Mirror layers exceeded the safety cap; indicates an invariant bug."""


class MixedChainError(ReflectError):
    """Chain positions from different chains were combined."""


class AnchorUndefined(ReflectError):
    """Boundary chain anchors could not be constructed."""
