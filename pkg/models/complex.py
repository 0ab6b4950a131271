# models/complex.py
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

from .algebra import AbelianGroup, GradedGroup


@dataclass(frozen=True)
class Generator:
    id: str
    maslov: int
    alexander: int


@dataclass(frozen=True)
class Edge:
    """d(source) contains coefficient * target."""
    source: str
    target: str
    coefficient: int


@dataclass(frozen=True)
class FilteredComplex:
    """Bigraded free chain complex whose differential never raises the Alexander grading.

    Generators are kept sorted by id and edges by (source, target), so two
    complexes with the same data compare equal.
    """
    generators: Tuple[Generator, ...] = ()
    differential: Tuple[Edge, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(sorted(self.generators, key=lambda g: g.id)))
        object.__setattr__(self, "differential", tuple(sorted(
            (e for e in self.differential if e.coefficient != 0),
            key=lambda e: (e.source, e.target),
        )))

    @property
    def by_id(self) -> Dict[str, Generator]:
        return {g.id: g for g in self.generators}

    def __len__(self) -> int:
        return len(self.generators)

    def is_empty(self) -> bool:
        return not self.generators

    def restrict(self, keep: List[Generator], name: Optional[str] = None) -> "FilteredComplex":
        """Generators in keep with every edge whose endpoints both survive."""
        ids = {g.id for g in keep}
        return FilteredComplex(
            tuple(keep),
            tuple(e for e in self.differential if e.source in ids and e.target in ids),
            name if name is not None else self.name,
        )


@dataclass(frozen=True)
class HFKTable:
    """(alexander, maslov) -> nonzero AbelianGroup.

    metadata records how the table was produced (assumptions, warnings) and
    is ignored by equality.
    """
    entries: Dict[Tuple[int, int], AbelianGroup] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", {
            key: g for key, g in sorted(self.entries.items()) if not g.is_zero()
        })

    def __getitem__(self, key: Tuple[int, int]) -> AbelianGroup:
        return self.entries.get(key, AbelianGroup.zero())

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()

    def is_empty(self) -> bool:
        return not self.entries

    def alexander_gradings(self) -> List[int]:
        return sorted({i for i, _ in self.entries}, reverse=True)

    def row(self, alexander: int) -> GradedGroup:
        return GradedGroup({m: g for (i, m), g in self.entries.items() if i == alexander})

    def has_torsion(self) -> bool:
        return any(g.has_torsion() for g in self.entries.values())

    def restrict(self, predicate) -> "HFKTable":
        return HFKTable({(i, m): g for (i, m), g in self.entries.items() if predicate(i)}, dict(self.metadata))

    @classmethod
    def from_rows(cls, rows: Dict[int, GradedGroup]) -> "HFKTable":
        return cls({(i, m): g for i, graded in rows.items() for m, g in graded.items()})


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    offenders: Tuple[str, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    name: str
    checks: Tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)
