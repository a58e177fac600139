"""Exception types raised by the library."""


class KiselmanError(Exception):
    """Base class for all library errors."""


class RankMismatchError(KiselmanError, ValueError):
    """Operands belong to Kiselman semigroups of different rank."""


class LetterOutOfRangeError(KiselmanError, ValueError):
    pass


class WordParseError(KiselmanError, ValueError):
    pass


class StepNotApplicableError(KiselmanError, ValueError):
    pass


class NotIdempotentError(KiselmanError, ValueError):
    pass


class NotNilpotentError(KiselmanError, ValueError):
    pass


class NotUnionClosedError(KiselmanError, ValueError):
    pass


class InvalidContentError(KiselmanError, ValueError):
    pass


class ResourceLimitError(KiselmanError, RuntimeError):
    """A configured size cap (elements, families, ...) was exceeded."""
