"""
Error Types
Exceptions raised across the board, symmetry, solver, bounds, constructions and CLI layers
"""

from typing import List, Optional


class QueensDominationError(Exception):
    """Base class for every error raised by this package"""


# ---------------------------------------------------------------------
# Board / symmetry
# ---------------------------------------------------------------------

class OutOfBounds(QueensDominationError, ValueError):
    """A square lies outside the board it is used with"""


class DuplicateSquare(QueensDominationError, ValueError):
    """The same square was given twice for one queen set"""


class InvalidIsometry(QueensDominationError, ValueError):
    """A diagonal flip or quarter turn was requested on a non-square board"""


class MixedDims(QueensDominationError, ValueError):
    """Queen sets from different boards were mixed in one call"""


class NotASubset(QueensDominationError, ValueError):
    """A foursome is not contained in the set being flipped"""


class OffBoard(QueensDominationError, ValueError):
    """A derived square (flip image, frame conversion) falls off the board"""


# ---------------------------------------------------------------------
# Solver / bounds
# ---------------------------------------------------------------------

class BudgetExceeded(QueensDominationError, RuntimeError):
    """Raised inside the search engine when a node or time budget runs out"""


class InputNotDominating(QueensDominationError, ValueError):
    """An operation that needs a dominating set received one that is not"""


class NoEmptyLine(QueensDominationError, ValueError):
    """The box of a set needs two empty rows and two empty columns"""


class PreconditionNotMet(QueensDominationError, ValueError):
    """A structural check was asked for a set outside its hypotheses"""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        message = f"precondition not met: {condition}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


# ---------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------

class InfeasiblePlan(QueensDominationError, ValueError):
    """A line plan violates the linear or quadratic line-number constraints"""


class InvalidParams(QueensDominationError, ValueError):
    """Construction parameters are outside their valid range"""


class InvalidParity(InvalidParams):
    """m1 and n1 are both even"""


class NegativeAuxCount(InvalidParams):
    """k leaves a negative number of auxiliary rows or columns"""


class InvalidM1(InvalidParams):
    """m1 is not a valid size for the requested family"""


# ---------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------

class ParseError(QueensDominationError, ValueError):
    """A solution file could not be read"""


class VerificationFailed(QueensDominationError, RuntimeError):
    """A solution file did not re-verify"""

    def __init__(self, failures: List[str], path: Optional[str] = None):
        self.failures = list(failures)
        self.path = path
        where = f" in {path}" if path else ""
        super().__init__(f"{len(self.failures)} verification failure(s){where}: " + "; ".join(self.failures[:5]))
