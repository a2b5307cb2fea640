"""Exception types shared across the package."""


class LrcPirError(ValueError):
    pass


# fields
class NotPrime(LrcPirError):
    pass


class ReduciblePolynomial(LrcPirError):
    pass


class FieldMismatch(LrcPirError):
    pass


class ZeroElement(LrcPirError):
    pass


class DivisionByZero(LrcPirError, ZeroDivisionError):
    pass


# matrices and codes
class IndexOutOfRange(LrcPirError, IndexError):
    pass


class DimensionMismatch(LrcPirError):
    pass


class Unsolvable(LrcPirError):
    """The erased coordinates cannot be recovered uniquely."""


class RankDeficientH(LrcPirError):
    pass


class TooLarge(LrcPirError):
    """An exhaustive enumeration would exceed the desk-scale guard."""


class WrongSize(LrcPirError):
    pass


class LengthMismatch(LrcPirError):
    pass


# locality
class IndivisibleLocality(LrcPirError):
    pass


class InconsistentLength(LrcPirError):
    pass


class NotMds(LrcPirError):
    pass


class NotSystematic(LrcPirError):
    pass


class ParameterMismatch(LrcPirError):
    pass


# E matrix
class InfeasibleRho(LrcPirError):
    pass


class SwapExhausted(LrcPirError):
    pass


class NonCompliantCode(LrcPirError):
    pass


class BudgetExceeded(LrcPirError):
    pass
