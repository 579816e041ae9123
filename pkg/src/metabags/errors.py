"""Exception types shared across the package."""


class MetaBagsError(Exception):
    """Base class for errors raised by this package."""


class DataError(MetaBagsError):
    """Bad input data: ingestion failures, shape/schema mismatches, invalid
    sampling parameters."""


class NoValidSplitError(MetaBagsError):
    """Raised when every candidate split of a meta-tree node is degenerate."""
