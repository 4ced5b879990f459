"""Exception types shared across the package."""


class LRLabError(Exception):
    """Base class for all package-specific errors."""


class InvalidPartition(LRLabError):
    """Raw sequence cannot be canonicalized into a partition."""


class NotWeaklyDecreasing(InvalidPartition):
    """Entries increase somewhere before trailing zeros are stripped."""


class NotComparable(LRLabError):
    """Interpolation needs the first partition to dominate the second."""


class IndexOutOfRange(LRLabError):
    """A row or column index leaves {1..l}."""


class CapMismatch(LRLabError):
    """Arithmetic mixed elements with different length caps."""


class BudgetExceeded(LRLabError):
    """An expansion grew past the configured term budget."""


class UnknownLemma(LRLabError):
    """Verification was requested for an identifier that is not registered."""


class NoDecomposition(LRLabError):
    """A cone member admits no non-negative generator decomposition.

    Raising this falsifies the cone-generation claim at a concrete instance,
    so it is never swallowed: the message carries the full instance.
    """


class HypothesisFails(LRLabError):
    """transfer_witness was called on partitions violating its hypothesis."""


class NotFoundWithin(LRLabError):
    """A bounded search exhausted its range without finding a witness."""


class UnsupportedLength(LRLabError):
    """Operation is restricted to small lengths at desk scale."""


class InternalCheckError(LRLabError):
    """A structural invariant failed inside the engine (a bug, not bad input)."""
