"""Exception hierarchy shared across the package.

Every failure mode that callers may want to handle gets its own class so
that the CLI can map them onto exit codes and messages without string
matching.
"""


class OpdrError(Exception):
    """Base class for all errors raised by this package."""


# --- file I/O -----------------------------------------------------------


class MalformedHeader(OpdrError):
    """Binary file header is truncated, has a bad magic, or a bad version."""


class InconsistentRowWidth(OpdrError):
    """A CSV row has a different number of columns than the first row."""


class NonFiniteValue(OpdrError):
    """A NaN or infinity was found where a finite number is required."""


class EmptyFile(OpdrError):
    """The input file contains no data rows."""


class IoWrite(OpdrError):
    """The output path could not be written."""


# --- metrics / knn ------------------------------------------------------


class DimensionMismatch(OpdrError):
    """Two vectors (or vector sets) do not share a dimension."""


class ZeroNormVector(OpdrError):
    """Cosine distance is undefined for a zero-norm vector."""


class KTooLarge(OpdrError):
    """Requested k leaves no room for self-exclusion (k >= m)."""


# --- measure / accuracy -------------------------------------------------


class OverlappingSubsets(OpdrError):
    """Subsets passed as a partition are not pairwise disjoint."""


class TableMismatch(OpdrError):
    """Two KNN tables disagree on point count or k."""


# --- reduction ----------------------------------------------------------


class TargetDimTooLarge(OpdrError):
    """Requested target dimension exceeds what the method can produce."""


# --- fitting ------------------------------------------------------------


class InsufficientSamples(OpdrError):
    """Fewer than two samples were supplied to the regression."""


class DegenerateDesign(OpdrError):
    """All samples share one n/m ratio; the slope is unidentifiable."""


class NonPositiveSlope(OpdrError):
    """Fitted slope c0 <= 0; the law cannot be inverted for a dimension."""


# --- harness ------------------------------------------------------------


class DatasetTooSmall(OpdrError):
    """The dataset has fewer points than the largest requested subsample."""


class EmptyInput(OpdrError):
    """An operation that needs at least one record received none."""
