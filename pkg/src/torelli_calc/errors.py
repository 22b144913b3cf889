"""Exception hierarchy shared by every module of the package."""


class TorelliCalcError(Exception):
    """Base class for computation errors raised by torelli_calc."""


class ParseError(TorelliCalcError, ValueError):
    pass


class NotNormalizable(TorelliCalcError):
    pass


class NotCoprime(TorelliCalcError, ValueError):
    pass


class UnsupportedKnot(TorelliCalcError):
    pass


class ParityViolation(TorelliCalcError):
    pass


class OddDValue(TorelliCalcError, ValueError):
    pass


class MismatchWithGapOracle(TorelliCalcError):
    pass


class NotBlowdownable(TorelliCalcError):
    pass


class PatternMismatch(TorelliCalcError):
    """A rewrite was requested on components that do not fit its pattern.

    ``reasons`` lists every failed precondition.
    """

    def __init__(self, reasons):
        if isinstance(reasons, str):
            reasons = [reasons]
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class NotBrunnianDescriptor(TorelliCalcError):
    pass


class ReductionStuck(TorelliCalcError):
    """The reduce driver ran out of applicable moves.

    The partially reduced presentation is kept on ``remaining``.
    """

    def __init__(self, message, remaining=None):
        super().__init__(message)
        self.remaining = remaining


class UnrealizedGenerator(TorelliCalcError):
    pass


class NonTorelliLetter(TorelliCalcError):
    pass


class LetterNotInA(TorelliCalcError):
    pass


class ZeroD(TorelliCalcError, ValueError):
    pass


class NonAdditiveCasson(TorelliCalcError):
    pass
