"""Error types shared across the package."""


class DegenerateSolutionError(RuntimeError):
    """The compressed solution has (numerically) zero norm, so entry
    probabilities are undefined and sampling is impossible."""


class RejectionCapError(RuntimeError):
    """Rejection sampling hit its round cap without accepting a proposal."""


class NonFiniteIterateError(RuntimeError):
    """A solver update produced a non-finite value."""
