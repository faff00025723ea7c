"""Exception hierarchy shared by every sl2q subpackage."""


class Sl2qError(Exception):
    """Base class of all errors raised by sl2q."""


class DivisionByZero(Sl2qError, ZeroDivisionError):
    pass


class PoleAtEvaluationPoint(Sl2qError, ValueError):
    pass


class FieldMismatch(Sl2qError, ValueError):
    pass


class PreconditionError(Sl2qError, ValueError):
    """A constructor or operation was called outside its documented domain."""


class ZeroC(PreconditionError):
    pass


class ZeroMu(PreconditionError):
    pass


class BadLevel(PreconditionError):
    pass


class BadParity(PreconditionError):
    pass


class CrelViolation(PreconditionError):
    pass


class WeightInSpecialCase(PreconditionError):
    pass


class UnsupportedFamily(PreconditionError):
    pass


class NotScalar(Sl2qError, ArithmeticError):
    pass


class NonUnitarizable(Sl2qError, ValueError):
    pass
