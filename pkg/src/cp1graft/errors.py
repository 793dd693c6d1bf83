"""Exception hierarchy shared by all modules."""


class CP1Error(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(CP1Error, ValueError):
    pass


class SingularMatrix(InvalidInput):
    pass


class IdentityInput(InvalidInput):
    pass


class NotElliptic(InvalidInput):
    pass


class NotFixedPoint(InvalidInput):
    pass


class CoincidentPoints(InvalidInput):
    pass


class EqualCircles(InvalidInput):
    pass


class PointNotOnCircles(InvalidInput):
    pass


class TangentCircles(InvalidInput):
    pass


class DegenerateConfiguration(InvalidInput):
    pass


class NotHyperbolic(InvalidInput):
    pass


class DegenerateTriple(InvalidInput):
    pass


class MismatchedInputs(InvalidInput):
    pass


class OutOfRange(InvalidInput):
    pass


class NotAtomic(InvalidInput):
    pass


class VerticesNotOnConfiguration(InvalidInput):
    pass


class MismatchedFraming(InvalidInput):
    pass


class PathologicalFraming(InvalidInput):
    pass


class InvalidIndices(InvalidInput):
    """An index is non-positive or a multiple of 2*pi (apparent singularity)."""


class UnsupportedCurveShape(InvalidInput):
    pass


class NotSameFramedHolonomy(InvalidInput):
    pass


class PoleEvaluation(InvalidInput):
    pass


class IntegerExponent(InvalidInput):
    pass


class IntegrationFailure(CP1Error, RuntimeError):
    pass
