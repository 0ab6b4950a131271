# models/verify.py
from pydantic import BaseModel
from typing import List

from .enums import CheckStatus

class VerifyCheck(BaseModel):
    name: str
    status: CheckStatus
    detail: str = ""

class VerifyReport(BaseModel):
    name: str
    checks: List[VerifyCheck] = []

    @property
    def exit_code(self) -> int:
        return 1 if any(check.status == CheckStatus.FAIL for check in self.checks) else 0

    def status_of(self, name: str) -> CheckStatus:
        for check in self.checks:
            if check.name == name:
                return check.status
        raise KeyError(name)
