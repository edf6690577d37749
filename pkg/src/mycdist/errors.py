"""Exception types shared across the package."""


class MycdistError(Exception):
    """Base class for all package errors."""


class MalformedGraph6(MycdistError):
    """Input is not a valid graph6 byte string."""


class Unsupported(MycdistError):
    """graph6 order outside the supported single-byte range (n > 62)."""


class VertexOutOfRange(MycdistError):
    """Vertex id not in 0..n-1."""


class EmptySource(MycdistError):
    """Mycielskian of the order-0 graph is not defined here."""


class InvalidT(MycdistError):
    """Mycielskian level parameter t must be >= 1."""


class LayoutMismatch(MycdistError):
    """Layout does not describe the given graph."""


class SizeMismatch(MycdistError):
    """Permutation length differs from graph order."""


class GraphTooLarge(MycdistError):
    """Graph order exceeds the configured cap for this operation."""


class GroupTooLarge(MycdistError):
    """Automorphism listing exceeds the configured element cap."""


class SearchBudgetExceeded(MycdistError):
    """Search spent its step budget before finishing."""

    def __init__(self, steps: int):
        super().__init__(f"search budget exceeded after {steps} steps")
        self.steps = steps


class MalformedColoring(MycdistError):
    """Coloring length or color values are inconsistent."""


class PreconditionViolated(MycdistError):
    """Construction called outside its case preconditions."""


class PaletteExhausted(MycdistError):
    """Construction needs more colors than the palette allows."""


class InvalidM(MycdistError):
    """Star parameter m outside the supported range."""


class InvalidN(MycdistError):
    """Complete-graph parameter n outside the supported range."""
