"""Exception hierarchy.

Everything raised on purpose by the library derives from
:class:`PantsSpectrumError`, so callers (and the CLI) can tell a rejected input
or a failed consistency check apart from a programming error.
"""


class PantsSpectrumError(Exception):
    pass


# words

class EmptyWordError(PantsSpectrumError, ValueError):
    pass


class NonReducedWordError(PantsSpectrumError, ValueError):
    def __init__(self, index, letters):
        self.index = index
        self.letters = letters
        super().__init__(
            f"word is not cyclically reduced: letter {index} cancels the next one"
        )


class GuardExceededError(PantsSpectrumError, ValueError):
    pass


# moduli

class NonPositiveLengthError(PantsSpectrumError, ValueError):
    pass


class DegenerateMetricError(PantsSpectrumError, ValueError):
    pass


class DegenerateParamsError(PantsSpectrumError, ValueError):
    pass


# geometry

class NonHyperbolicTraceError(PantsSpectrumError, ArithmeticError):
    """|trace| <= 2 for a word that must be hyperbolic."""


class OverflowDetectedError(PantsSpectrumError, OverflowError):
    pass


# stats

class TooFewSamplesError(PantsSpectrumError, ValueError):
    pass


class ZeroVarianceError(PantsSpectrumError, ValueError):
    pass


class EmptySampleError(PantsSpectrumError, ValueError):
    pass


class SpacingTooFineError(PantsSpectrumError, ValueError):
    pass


# experiment / reporting

class ConfigInvalidError(PantsSpectrumError, ValueError):
    pass


class ReportError(PantsSpectrumError, OSError):
    pass


class CombUndefinedError(PantsSpectrumError, ValueError):
    """No multiple of the spacing falls inside the central mass of the histogram."""
