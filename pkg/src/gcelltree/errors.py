"""Shared exception types."""


class GCellTreeError(Exception):
    """Base class for all errors raised by this package."""


class ValueOverflowError(GCellTreeError):
    """A computation would exceed the 64-bit unsigned value range."""


class IterationCapError(GCellTreeError):
    """The iteration cap was hit before reaching 1.

    This is not a divergence witness: it only means no convergence was
    observed within the configured number of steps.
    """


class WidthUnderflowError(GCellTreeError):
    """Cell widths shrank below the configured denominator limit."""


class LayoutError(GCellTreeError):
    """Internal placement inconsistency (two positions for one value, or a
    value left unplaced).  Indicates a bug, not bad input."""
