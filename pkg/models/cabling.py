# models/cabling.py
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .complex import HFKTable
from .enums import BoundSide
from .errors import MissingCPrime, ZeroParameter


class CableParams(BaseModel):
    """Cabling parameters for the (p, pn+1) cable of a knot, n of either sign.

    c_prime is the diagram constant entering the validity threshold; it is
    required for p > 2.
    """
    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2)
    n: int
    c_prime: Optional[int] = Field(None, ge=0)
    large_n_override: bool = False

    @field_validator("n")
    def nonzero_n(cls, v: int) -> int:
        if v == 0:
            raise ZeroParameter("Cabling parameter n must be nonzero")
        return v

    @model_validator(mode="after")
    def require_c_prime(self) -> "CableParams":
        if self.p > 2 and self.c_prime is None:
            raise MissingCPrime(f"c_prime is required for p={self.p}")
        return self


@dataclass(frozen=True)
class PartialHFKTable:
    """HFK table known only on one side of a threshold.

    side ABOVE means the groups are valid for i > threshold, BELOW for
    i < -threshold, FULL for every i.
    """
    table: HFKTable
    side: BoundSide
    threshold: int
    assumptions: Dict[str, Any] = field(default_factory=dict)

    def in_range(self, alexander: int) -> bool:
        if self.side == BoundSide.ABOVE:
            return alexander > self.threshold
        if self.side == BoundSide.BELOW:
            return alexander < -self.threshold
        return True

    def describe_range(self) -> str:
        if self.side == BoundSide.ABOVE:
            return f"i > {self.threshold}"
        if self.side == BoundSide.BELOW:
            return f"i < {-self.threshold}"
        return "all i"
