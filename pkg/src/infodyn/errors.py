"""Exception hierarchy shared by all infodyn modules."""


class InfodynError(ValueError):
    """Base class for every error raised by the package."""


class DegenerateTableError(InfodynError):
    pass


class NegativeCountError(InfodynError):
    pass


class LabelError(InfodynError):
    """Labels are duplicated, unknown, uncovered or misaligned."""


class UnknownLabelError(LabelError):
    pass


class UncoveredLabelError(LabelError):
    pass


class InfiniteSurpriseError(InfodynError):
    """A posterior assigns mass where the prior has none."""


class NoTransmissionChangeError(InfodynError):
    pass


class DecompositionUndefinedError(InfodynError):
    pass


class MatrixFormatError(InfodynError):
    """A matrix or partition file could not be parsed."""


class MissingValueError(MatrixFormatError):
    def __init__(self, row, col):
        self.row = row
        self.col = col
        super().__init__(f"missing value at row {row!r}, column {col!r}")
