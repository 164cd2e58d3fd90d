class SuffixArrayError(ValueError):
    """Base class; ``code`` is the stable error identifier."""

    code = "ERROR"


class InputContainsNul(SuffixArrayError):
    code = "INPUT_CONTAINS_NUL"


class InputTooLarge(SuffixArrayError):
    code = "INPUT_TOO_LARGE"


class WidthTooSmall(SuffixArrayError):
    code = "WIDTH_TOO_SMALL"


class EmptyWord(SuffixArrayError):
    code = "EMPTY_WORD"
