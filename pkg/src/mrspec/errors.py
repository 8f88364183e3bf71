"""Exception types shared across the package."""


class ConstraintError(ValueError):
    """A bound-state existence condition is violated.

    Raised when the requested quantum numbers or potential parameters cannot
    produce a normalizable negative-energy state (reality of the angular
    eigenvalue, positivity of the decay exponent, or negativity of the
    energy once the centrifugal constant is included).
    """


class GoldenDataError(Exception):
    """A golden reference table is missing, malformed, or fails its schema."""
