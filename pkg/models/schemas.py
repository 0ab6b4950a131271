from pydantic import BaseModel, ConfigDict, Field, StrictInt, model_validator
from typing import Any, Dict, List, Literal, Optional, Tuple

from .enums import BoundSide

# Complex file schemas
class GeneratorSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    maslov: StrictInt
    alexander: StrictInt

class EdgeSchema(BaseModel):
    """d(from) contains coefficient * to."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str = Field(..., alias="from")
    target: str = Field(..., alias="to")
    coefficient: StrictInt

class ComplexDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    generators: List[GeneratorSchema]
    differential: List[EdgeSchema] = []

    @model_validator(mode="after")
    def unique_ids(self) -> "ComplexDocument":
        seen = set()
        for position, generator in enumerate(self.generators):
            if generator.id in seen:
                raise ValueError(f"duplicate generator id {generator.id!r} at generators[{position}]")
            seen.add(generator.id)
        return self

# Table file schemas
class TableEntrySchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    alexander: StrictInt
    maslov: StrictInt
    free_rank: StrictInt = Field(0, ge=0)
    torsion: List[StrictInt] = []

class ValidRangeSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    side: BoundSide
    threshold: StrictInt

class TableDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    kind: Literal["hfk_table", "partial_hfk_table"] = "hfk_table"
    entries: List[TableEntrySchema] = []
    metadata: Dict[str, Any] = {}
    valid_range: Optional[ValidRangeSchema] = None
    assumptions: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def consistent_kind(self) -> "TableDocument":
        keys = [(e.alexander, e.maslov) for e in self.entries]
        if len(keys) != len(set(keys)):
            raise ValueError("repeated (alexander, maslov) entry")
        if self.kind == "partial_hfk_table" and self.valid_range is None:
            raise ValueError("partial_hfk_table needs valid_range")
        if self.kind == "hfk_table" and (self.valid_range is not None or self.assumptions is not None):
            raise ValueError("hfk_table does not take valid_range or assumptions")
        return self

# Alexander polynomial output
class PolynomialDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    coefficients: List[Tuple[int, int]]
    pretty: str
