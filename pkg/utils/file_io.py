import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import BaseModel, ValidationError

from models.algebra import AbelianGroup
from models.cabling import PartialHFKTable
from models.complex import Edge, FilteredComplex, Generator, HFKTable
from models.enums import BoundSide
from models.errors import ParseError
from models.laurent import LaurentPoly
from models.schemas import (ComplexDocument, EdgeSchema, GeneratorSchema, PolynomialDocument,
                            TableDocument, TableEntrySchema, ValidRangeSchema)

logger = logging.getLogger(__name__)

AnyTable = Union[HFKTable, PartialHFKTable]


def canonical_json(document: Dict[str, Any]) -> str:
    """Sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _read_document(path: Union[str, Path], schema: type) -> BaseModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(str(path), str(e))
    return parse_document(text, schema, str(path))


def parse_document(text: str, schema: type, source: str = "<string>") -> BaseModel:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, e.msg, f"line {e.lineno} column {e.colno}")
    try:
        return schema.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise ParseError(source, first["msg"], location)

# --- complexes ------------------------------------------------------------

def complex_to_document(complex_: FilteredComplex) -> Dict[str, Any]:
    document = ComplexDocument(
        name=complex_.name,
        generators=[GeneratorSchema(id=g.id, maslov=g.maslov, alexander=g.alexander)
                    for g in complex_.generators],
        differential=[EdgeSchema(source=e.source, target=e.target, coefficient=e.coefficient)
                      for e in complex_.differential],
    )
    return document.model_dump(by_alias=True)


def document_to_complex(document: ComplexDocument) -> FilteredComplex:
    return FilteredComplex(
        tuple(Generator(g.id, g.maslov, g.alexander) for g in document.generators),
        tuple(Edge(e.source, e.target, e.coefficient) for e in document.differential),
        document.name,
    )


def dump_complex(complex_: FilteredComplex) -> str:
    return canonical_json(complex_to_document(complex_))


def load_complex(path: Union[str, Path]) -> FilteredComplex:
    complex_ = document_to_complex(_read_document(path, ComplexDocument))
    logger.debug(f"Loaded complex {complex_.name!r} from {path}: {len(complex_)} generators")
    return complex_

# --- tables ---------------------------------------------------------------

def table_to_document(table: AnyTable, name: str = "") -> Dict[str, Any]:
    hfk = table.table if isinstance(table, PartialHFKTable) else table
    entries = [
        TableEntrySchema(alexander=i, maslov=m, free_rank=g.free_rank, torsion=list(g.torsion))
        for (i, m), g in sorted(hfk.items(), reverse=True)
    ]
    if isinstance(table, PartialHFKTable):
        document = TableDocument(
            name=name, kind="partial_hfk_table", entries=entries, metadata=dict(hfk.metadata),
            valid_range=ValidRangeSchema(side=table.side, threshold=table.threshold),
            assumptions=dict(table.assumptions),
        )
    else:
        document = TableDocument(name=name, entries=entries, metadata=dict(hfk.metadata))
    return document.model_dump(mode="json", exclude_none=True)


def document_to_table(document: TableDocument) -> AnyTable:
    entries = {
        (e.alexander, e.maslov): AbelianGroup.from_cyclic_orders(e.free_rank, e.torsion)
        for e in document.entries
    }
    table = HFKTable(entries, dict(document.metadata))
    if document.kind == "partial_hfk_table":
        return PartialHFKTable(table, BoundSide(document.valid_range.side), document.valid_range.threshold,
                               dict(document.assumptions or {}))
    return table


def dump_table(table: AnyTable, name: str = "") -> str:
    return canonical_json(table_to_document(table, name))


def load_table(path: Union[str, Path]) -> AnyTable:
    document = _read_document(path, TableDocument)
    try:
        return document_to_table(document)
    except ValueError as e:
        raise ParseError(str(path), str(e), "entries")

# --- polynomials ----------------------------------------------------------

def dump_polynomial(poly: LaurentPoly, name: str = "") -> str:
    document = PolynomialDocument(name=name, coefficients=poly.terms(), pretty=str(poly))
    return canonical_json(document.model_dump(mode="json"))


def write_text(path: Union[str, Path], text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
