class DivergenceError(RuntimeError):
    """Raised when an energy diverges: touching or coincident geometry, or an
    elliptic parameter at or beyond its singularity."""


class TopologyError(RuntimeError):
    """Raised when a link does not have the topology its construction
    promises, or when a minimizer escapes the starting topology."""


class ResolutionError(TopologyError):
    """Raised when a Gauss linking sum is not close enough to an integer to be
    trusted."""
