"""Exception hierarchy shared by every module of the package."""


class InputError(ValueError):
    """Invalid argument or malformed input (CLI exit code 2)."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RefusedError(InputError):
    """Parameters outside the range a theorem or harness profile supports."""


class PreconditionError(InputError):
    """A constructive move was asked to run where its preconditions fail."""


class MergeInapplicable(PreconditionError):
    pass


class RerouteInapplicable(PreconditionError):
    pass


class NoPerfectMatching(Exception):
    """No perfect matching in the requested direction.

    ``violator`` is a source-side vertex set S with |N+(S)| < |S|.
    """

    def __init__(self, direction, violator):
        self.direction = direction
        self.violator = violator
        names = " ".join(str(v) for v in sorted(violator))
        super().__init__(f"no perfect matching {direction}: Hall violator {{{names}}}")


class NoCycleFactor(NoPerfectMatching):
    pass


class BudgetExhausted(Exception):
    """Search node budget ran out; ``best`` is the best factor seen so far."""

    def __init__(self, best, nodes):
        self.best = best
        self.nodes = nodes
        self.optimal = False
        super().__init__(f"node budget exhausted after {nodes} nodes; best factor has {len(best)} cycles")


class ConsistencyError(RuntimeError):
    """An internal cross-check disagreed (CLI exit code 5)."""
