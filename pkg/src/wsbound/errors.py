"""Exception types shared across the package."""


class WsboundError(Exception):
    """Base class for all package-specific errors."""


class DomainError(WsboundError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SpecialCaseError(DomainError):
    """A parameter point must be handled by a dedicated special-case path."""


class OverflowDomainError(WsboundError, ArithmeticError):
    """A numeric evaluation left the representable range; message names where."""


class NonSquareRadicandError(WsboundError):
    """The radicand for a candidate k is not a perfect square."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NoBoundBranchError(WsboundError):
    """No (k, pi) candidate yields tau' < 0."""


class NoRootError(WsboundError):
    """A bracketing root search found no sign change."""


class NoRealLevelError(WsboundError):
    """A closed-form energy expression has no real value at these parameters."""


class NoSuchLevelError(WsboundError):
    """The requested bound-level index does not exist for this potential."""


class PoleError(WsboundError):
    """Evaluation requested at a pole of the weight-function quotient."""


class DegenerateWavefunctionError(WsboundError):
    """A wavefunction sample set has zero norm and cannot be normalized."""


class ConstructionError(WsboundError):
    """A matrix or grid could not be constructed; message names the node."""


class ConvergenceError(WsboundError):
    """An iterative procedure failed to converge.

    Carries the sequence of iterates (energies or residuals) that was
    produced before giving up, for diagnosis.
    """

    def __init__(self, message, sequence=()):
        super().__init__(message)
        self.sequence = tuple(sequence)
