"""Exception hierarchy shared across the toolkit.

Builder errors carry enough context to be reported by the CLI without
re-deriving anything; search budget exhaustion is deliberately distinct
from nonexistence.
"""


class CirculantColoringError(Exception):
    """Base class for all toolkit errors."""


# -- graph construction ------------------------------------------------------

class EmptyGeneratorSet(CirculantColoringError):
    pass


class GeneratorOutOfRange(CirculantColoringError):
    pass


class DuplicateGenerator(CirculantColoringError):
    pass


class KOutOfRange(CirculantColoringError):
    pass


class NotASubset(CirculantColoringError):
    pass


class OddOrder(CirculantColoringError):
    pass


# -- latin squares -----------------------------------------------------------

class EvenOrder(CirculantColoringError):
    pass


class IOutOfRange(CirculantColoringError):
    pass


# -- factorization / cycles --------------------------------------------------

class SearchBudgetExceeded(CirculantColoringError):
    """The configured node budget ran out before the search finished.

    This is an operational failure, never a claim of nonexistence.
    """


class FactorizationImpossible(CirculantColoringError):
    """The requested edge set provably has no 1-factorization
    (e.g. a component of odd order)."""


class NotAUnit(CirculantColoringError):
    pass


class NotAGenerator(CirculantColoringError):
    pass


class OddCycleLength(CirculantColoringError):
    pass


# -- builders ----------------------------------------------------------------

class PreconditionFailed(CirculantColoringError):
    pass


class VerificationFailed(CirculantColoringError):
    """A construction was emitted but the independent checker rejected it.

    The offending coloring and its report are attached for diagnostics.
    """

    def __init__(self, message, coloring=None, report=None):
        super().__init__(message)
        self.coloring = coloring
        self.report = report


class RainbowPropertyFailed(CirculantColoringError):
    pass


# -- verification ------------------------------------------------------------

class MissingAssignment(CirculantColoringError):
    pass


class ImproperColoring(CirculantColoringError):
    pass


# -- oracle ------------------------------------------------------------------

class InstanceTooLarge(CirculantColoringError):
    pass


class BudgetExceeded(CirculantColoringError):
    pass


# -- cli / io ----------------------------------------------------------------

class FixtureMissing(CirculantColoringError):
    pass


class MismatchFound(CirculantColoringError):
    def __init__(self, message, mismatches=None):
        super().__init__(message)
        self.mismatches = mismatches or []


class IoFailure(CirculantColoringError):
    pass
