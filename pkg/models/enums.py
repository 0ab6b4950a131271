# models/enums.py
from enum import Enum

class BoundSide(str, Enum):
    ABOVE = "above"
    BELOW = "below"
    FULL = "full"

class CheckStatus(str, Enum):
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"

class TableFormat(str, Enum):
    JSON = "json"
    GRID = "grid"
    CSV = "csv"
