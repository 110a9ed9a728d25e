"""Exception hierarchy shared by every module."""


class VmconnError(Exception):
    """Base class for all errors raised by the package."""


class GraphError(VmconnError, ValueError):
    pass


class LoopError(GraphError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"loop {arc}")


class DuplicateArcError(GraphError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"duplicate arc {arc}")


class VertexRangeError(GraphError):
    def __init__(self, item, n):
        self.item = item
        super().__init__(f"vertex out of range in {item} (n={n})")


class ArcNotPresentError(GraphError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(f"arc {arc} not present")


class NotStrongError(GraphError):
    def __init__(self, what="digraph is not strong"):
        super().__init__(what)


class DiameterUndefinedError(NotStrongError):
    def __init__(self):
        super().__init__("diameter undefined: digraph is not strong")


class NotTournamentError(GraphError):
    pass


class HypothesisViolated(VmconnError, ValueError):
    """A precondition taken from a theorem statement does not hold."""


class ColoringError(VmconnError, ValueError):
    pass


class EmptyDStarError(ColoringError):
    def __init__(self):
        super().__init__("all chromatic classes are singular; D* is empty")


class GuardExceeded(VmconnError):
    """Instance is larger than a solver's configured size guard."""

    def __init__(self, guard, limit, actual):
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(
            f"guard {guard} exceeded: {actual} > {limit} "
            "(raise the limit or pass --guard-override)"
        )


class ParseError(VmconnError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message)
