"""Exception hierarchy shared by every module in the package."""


class RiordanMomentsError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(RiordanMomentsError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegreeExceeded(RiordanMomentsError, ValueError):
    pass


class NonzeroConstantTerm(RiordanMomentsError, ValueError):
    pass


class NonUnitConstantTerm(RiordanMomentsError, ValueError):
    pass


class BadLowOrderTerms(RiordanMomentsError, ValueError):
    pass


class InsufficientOrder(RiordanMomentsError, ValueError):
    pass


class InsufficientData(RiordanMomentsError, ValueError):
    pass


class InsufficientMoments(InsufficientData):
    pass


class UnknownFamily(RiordanMomentsError, KeyError):
    pass


class NotTridiagonal(RiordanMomentsError, ValueError):
    pass


class NonMonicSuperdiagonal(RiordanMomentsError, ValueError):
    pass


class TooLarge(RiordanMomentsError, ValueError):
    pass
