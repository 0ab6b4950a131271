from .algebra import IntMatrix, AbelianGroup, GradedGroup
from .complex import Generator, Edge, FilteredComplex, HFKTable, CheckResult, ValidationReport
from .disks import DiskDatum, Grading, GradingAssignment
from .cabling import CableParams, PartialHFKTable
from .laurent import LaurentPoly
from .enums import BoundSide, CheckStatus, TableFormat
from .verify import VerifyCheck, VerifyReport

__all__ = [
    "IntMatrix", "AbelianGroup", "GradedGroup",
    "Generator", "Edge", "FilteredComplex", "HFKTable", "CheckResult", "ValidationReport",
    "DiskDatum", "Grading", "GradingAssignment",
    "CableParams", "PartialHFKTable",
    "LaurentPoly",
    "BoundSide", "CheckStatus", "TableFormat",
    "VerifyCheck", "VerifyReport",
]
