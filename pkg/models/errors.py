# models/errors.py
from typing import Optional


class HFKError(Exception):
    """Base class for every engine error."""


class CompositionNonzero(HFKError):
    pass


class DimensionMismatch(HFKError):
    pass


class EmptyTable(HFKError):
    pass


class ConflictingEntry(HFKError):
    def __init__(self, alexander: int, maslov: int, message: str = ""):
        self.alexander = alexander
        self.maslov = maslov
        super().__init__(message or f"Conflicting entry at (i={alexander}, M={maslov})")


class InconsistentDisks(HFKError):
    pass


class DisconnectedGraph(HFKError):
    pass


class ZeroParameter(HFKError):
    pass


class NotCoprime(HFKError):
    pass


class MissingCPrime(HFKError):
    pass


class InvalidComplex(HFKError):
    def __init__(self, report, message: Optional[str] = None):
        self.report = report
        failed = [check.name for check in report.checks if not check.passed]
        super().__init__(message or f"Invalid complex {report.name!r}: failed {', '.join(failed)}")


class ParseError(HFKError):
    def __init__(self, path: str, detail: str, location: Optional[str] = None):
        self.path = path
        self.detail = detail
        self.location = location
        where = f" at {location}" if location else ""
        super().__init__(f"Could not parse {path}{where}: {detail}")


class NotLargeN(UserWarning):
    """The large-n hypothesis of the cabling theorems is not known to hold."""


class TorsionWarning(UserWarning):
    """Torsion was found where every worked example is torsion-free."""


class UsageError(HFKError):
    """Command-line arguments that parse but do not make sense together."""
