"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A parameter violates a documented precondition."""


class BranchCutError(ValueError):
    """Evaluation requested on the branch cut of the principal logarithm."""


class SingularPointError(ValueError):
    """The point is indistinguishable from the singular set at the current depth."""


class ConvergenceError(RuntimeError):
    """An adaptive quadrature hit its node cap without meeting its tolerance."""


class DegenerateMassError(RuntimeError):
    """The boundary mass underflowed; use the log-scale frequency path instead."""
