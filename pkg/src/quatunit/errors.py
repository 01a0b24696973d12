"""Exception hierarchy shared by all modules.

The CLI maps these to exit codes: ``InvalidInput`` -> 1, ``ResourceLimit`` -> 2,
``PrecisionFailure`` -> 3.
"""


class QuatUnitError(Exception):
    pass


class InvalidInput(QuatUnitError, ValueError):
    """Malformed or out-of-domain input. ``path`` names the offending field."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path

    def __str__(self):
        msg = super().__str__()
        return f"{self.path}: {msg}" if self.path else msg


class DivisionByZero(QuatUnitError, ZeroDivisionError):
    pass


class ZeroDivisor(DivisionByZero):
    pass


class NegativeOperand(InvalidInput):
    pass


class NonPositiveOperand(InvalidInput):
    pass


class ZeroOperand(InvalidInput):
    pass


class ZeroAlpha(InvalidInput):
    pass


class NormNotAboveOne(InvalidInput):
    def __init__(self, index, path=None):
        super().__init__(f"generator {index} has norm <= 1", path)
        self.index = index


class ZeroGenerator(InvalidInput):
    def __init__(self, index, path=None):
        super().__init__(f"generator {index} is zero", path)
        self.index = index


class NotCommutative(InvalidInput):
    pass


class NotCoplanar(QuatUnitError):
    pass


class OffCurve(InvalidInput):
    pass


class PreconditionFailed(InvalidInput):
    pass


class ResourceLimit(QuatUnitError):
    pass


class PrecisionFailure(QuatUnitError):
    pass
