"""Exception hierarchy. Every domain error carries its class name as a stable code."""


class CyclicCoverError(ValueError):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self):
        return type(self).__name__


class NonPrimeDegree(CyclicCoverError):
    pass


class TooFewBranchPoints(CyclicCoverError):
    pass


class LengthMismatch(CyclicCoverError):
    pass


class DuplicateBranchPoints(CyclicCoverError):
    pass


class ZeroExponent(CyclicCoverError):
    pass


class RamifiedAtInfinity(CyclicCoverError):
    pass


class CurveFormatError(CyclicCoverError):
    """Malformed curve JSON or rational literal."""


class InvalidProfile(CyclicCoverError):
    pass


class InvalidCover(CyclicCoverError):
    """Exponent vector is off the degree-zero hyperplane or a multiple of alpha."""


class NotIsomorphic(CyclicCoverError):
    pass


class OrientationMismatch(CyclicCoverError):
    """beta2 = beta1 + m*alpha only; no (x, y, zeta * y^j / z) form exists."""


class InvalidPair(CyclicCoverError):
    pass


class DegreeNotDivisible(CyclicCoverError):
    pass


class NotSquarefree(CyclicCoverError):
    pass


class ConstantFactor(CyclicCoverError):
    pass


class InexactDivision(CyclicCoverError):
    pass


class EquationFormatError(CyclicCoverError):
    pass


class InvalidQuery(CyclicCoverError):
    """A command argument is incompatible with the curve it is applied to."""


class InternalInconsistency(AssertionError):
    """Two independent routes to the same quantity disagreed. Always a defect."""
