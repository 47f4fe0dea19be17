"""Exception hierarchy for ternjump."""


class TernJumpError(Exception):
    pass


class NotCoprime(TernJumpError, ValueError):
    pass


class InvalidTriple(TernJumpError, ValueError):
    pass


class PrimalityRequired(InvalidTriple):
    pass


class OutOfRange(TernJumpError, ValueError):
    pass


class Inconsistent(TernJumpError):
    """Two routes that must agree did not (always an upstream bug)."""


class InternalInconsistency(Inconsistent):
    pass


class EmptyCell(Inconsistent):
    pass


class LemmaViolation(Inconsistent):
    pass


class TooLarge(TernJumpError, ValueError):
    pass


class InexactDivision(TernJumpError):
    pass


class FlatnessViolation(TernJumpError):
    pass
