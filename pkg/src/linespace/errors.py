"""Exception types shared across the package."""

from __future__ import annotations


class LinespaceError(Exception):
    """Base class for all errors raised by this package."""


class SamePoint(LinespaceError):
    """A line was requested through a single point."""


class Disconnected(LinespaceError):
    """Graph metric requested for a disconnected graph."""


class BadParams(LinespaceError):
    """Construction or search parameters violate a precondition."""


class OddP(BadParams):
    """One-factorization requested for an odd number of vertices."""


class NoValidParams(BadParams):
    """The automatic parameter recipe has no valid output for this n."""


class SelfCheckFailed(LinespaceError):
    """A construction failed to verify one of its own claimed properties."""


class TooLarge(LinespaceError):
    """Instance exceeds the configured exhaustive-search limit."""


class BoundViolated(LinespaceError):
    """A proven lower bound failed on a computed family.

    This always indicates an implementation bug, never a property of the
    input, so it aborts the run instead of being recorded as a finding.
    """


class TheoremViolated(LinespaceError):
    """No small or universal closure-line found in a metric space.

    Every finite metric space has a closure-line that is either the whole
    ground set or a two-point set, so this too signals an implementation bug.
    """


class NotThreeUniform(LinespaceError):
    """Metrizability check invoked on a hypergraph with a non-triple edge."""


class MetricError(LinespaceError):
    """Base class for metric-axiom violations found during validation."""


class NotSquare(MetricError):
    pass


class Asymmetric(MetricError):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist[{i}][{j}] != dist[{j}][{i}]")
        self.indices = (i, j)


class NonzeroDiagonal(MetricError):
    def __init__(self, i: int):
        super().__init__(f"dist[{i}][{i}] is nonzero")
        self.indices = (i,)


class ZeroOffDiagonal(MetricError):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist[{i}][{j}] is zero for distinct points")
        self.indices = (i, j)


class NegativeDistance(MetricError):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist[{i}][{j}] is negative")
        self.indices = (i, j)


class TriangleViolation(MetricError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"dist[{i}][{k}] > dist[{i}][{j}] + dist[{j}][{k}]")
        self.indices = (i, j, k)
