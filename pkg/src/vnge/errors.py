"""Exception types shared across the package."""


class VngeError(Exception):
    """Base class for all package-specific errors."""


class SelfLoopError(VngeError):
    """An edge (u, u) was supplied; simple graphs have no self-loops."""


class NodeIndexError(VngeError):
    """A node index falls outside 0..n-1."""


class EdgeExistsError(VngeError):
    """The edge to add is already present."""


class EmptyEdgeSetError(VngeError):
    """The operation needs at least one edge (m >= 1)."""


class IsolatedNodeError(VngeError):
    """A degree-0 node makes the normalized density matrix ill-defined."""


class NotSymmetricError(VngeError):
    """Matrix input is not symmetric within tolerance."""


class NoConvergenceError(VngeError):
    """The eigensolver failed to converge."""


class NotNormalizedError(VngeError):
    """Spectrum does not sum to one within tolerance."""


class GraphCompleteError(VngeError):
    """No absent edge is available to add."""


class TooFewCandidatesError(VngeError):
    """Fewer than two absent edges; predictability is undefined."""


class DegenerateRatioError(VngeError):
    """A predictability denominator is zero or negative."""


class DisconnectedError(VngeError):
    """The operation requires a connected graph."""


class InconsistentStateError(VngeError):
    """Cached incremental sums disagree with a fresh recomputation."""


class PanelFormatError(VngeError):
    """Malformed price CSV: ragged rows, bad numbers, or nonpositive prices."""


class EdgeListFormatError(VngeError):
    """Malformed edge-list file; message carries the offending line number."""
