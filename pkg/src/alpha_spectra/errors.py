"""Exception types shared across the package."""


class HypothesisError(ValueError):
    """A closed form was invoked outside the hypotheses it requires."""


class IdentityViolation(ArithmeticError):
    """An exact identity that must hold did not (nonzero remainder, mismatch)."""


class DegreeBoundError(ArithmeticError):
    """Evaluation-interpolation detected a determinant above the declared degree."""


class PoleError(ZeroDivisionError):
    """A sample point hit a pole of a rational expression."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""
