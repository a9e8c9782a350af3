"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input: bad endpoint, self-loop, missing edge."""


class LimitExceeded(RuntimeError):
    """An instance is larger than the configured size limit for a stage."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what} = {value} exceeds limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class NotChordalError(GraphError):
    """Raised by operations requiring a chordal input; carries a hole."""

    def __init__(self, message: str, hole=None):
        super().__init__(message)
        self.hole = hole


class NotConnectedError(GraphError):
    """Raised by operations requiring a connected input."""


class BondageUndefined(RuntimeError):
    """The domination number of this graph cannot increase (no edges)."""


class TheoremViolation(RuntimeError):
    """A verified-impossible configuration was observed; carries diagnostics."""

    def __init__(self, message: str, bundle: str = ""):
        super().__init__(message)
        self.bundle = bundle
