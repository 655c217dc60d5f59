"""Engine-level error types."""


class FalsificationError(Exception):
    """A verified algebraic fact failed an exact machine check.

    Raised when a computation contradicts one of the ring-theoretic facts
    the engine is built to certify (a spectrum certificate that does not
    vanish, a missing joint eigenvector, a span mismatch).  This is a
    reported outcome, not an internal bug: it means the input theorem is
    false at the genus in question.
    """


class InfiniteQuotientError(ValueError):
    """The quotient by the given ideal is not finite dimensional."""
