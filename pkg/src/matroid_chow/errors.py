"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a stated precondition (bad element, loops, bad composition...)."""


class ConsistencyError(ArithmeticError):
    """Two routes that must agree did not, or an exact division left a remainder."""


class DegenerateSampleError(RuntimeError):
    """A randomly sampled vector hit a non-generic coincidence."""
