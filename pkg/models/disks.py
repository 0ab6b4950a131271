# models/disks.py
from pydantic import BaseModel, Field, ConfigDict
from typing import Dict, Optional


class DiskDatum(BaseModel):
    """Combinatorial record of a Whitney disk from from_id to to_id.

    maslov_unconstrained marks records that only carry a filtration
    difference (null-homology constraints); their maslov_index is ignored.
    """
    model_config = ConfigDict(frozen=True)

    from_id: str
    to_id: str
    maslov_index: int = 0
    n_w: int = Field(0, ge=0)
    n_z: int = Field(0, ge=0)
    n_zprime: int = Field(0, ge=0)
    maslov_unconstrained: bool = False

    @classmethod
    def null_homology(cls, from_id: str, to_id: str, n_w: int = 0, n_z: int = 0,
                      n_zprime: int = 0) -> "DiskDatum":
        return cls(from_id=from_id, to_id=to_id, n_w=n_w, n_z=n_z, n_zprime=n_zprime,
                   maslov_unconstrained=True)


class Grading(BaseModel):
    model_config = ConfigDict(frozen=True)

    maslov: Optional[int] = None
    filt_z: int
    filt_zprime: int


class GradingAssignment(BaseModel):
    """Generator id -> (Maslov grading, filtration w.r.t. z, filtration w.r.t. z')."""
    model_config = ConfigDict(frozen=True)

    gradings: Dict[str, Grading] = Field(default_factory=dict)

    def __getitem__(self, generator_id: str) -> Grading:
        return self.gradings[generator_id]

    def undetermined_maslov(self):
        return sorted(gid for gid, g in self.gradings.items() if g.maslov is None)
