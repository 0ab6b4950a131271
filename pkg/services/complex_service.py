from typing import Dict, List
from collections import defaultdict
import logging
import warnings

from models.algebra import AbelianGroup, GradedGroup, IntMatrix
from models.complex import CheckResult, Edge, FilteredComplex, Generator, HFKTable, ValidationReport
from models.errors import ConflictingEntry, EmptyTable, InvalidComplex, TorsionWarning
from .homology_service import homology_service

logger = logging.getLogger(__name__)


class ComplexService:
    """Operations on filtered knot chain complexes and their HFK tables."""

    CHECK_IDS = "well_formed"
    CHECK_D_SQUARED = "d_squared_zero"
    CHECK_MASLOV = "maslov_drop_one"
    CHECK_FILTRATION = "filtration_nonincreasing"
    CHECK_KNOT = "homology_is_Z_in_maslov_0"

    # --- validation -------------------------------------------------------

    def validate(self, complex_: FilteredComplex) -> ValidationReport:
        """Runs every complex invariant; never raises."""
        checks = [self._check_well_formed(complex_)]
        if not checks[0].passed:
            skipped = "skipped: complex is not well formed"
            checks += [CheckResult(name, False, (), skipped) for name in
                       (self.CHECK_D_SQUARED, self.CHECK_MASLOV, self.CHECK_FILTRATION, self.CHECK_KNOT)]
            return ValidationReport(complex_.name, tuple(checks))

        checks.append(self._check_d_squared(complex_))
        checks.append(self._check_maslov(complex_))
        checks.append(self._check_filtration(complex_))
        if all(check.passed for check in checks):
            checks.append(self._check_knot_homology(complex_))
        else:
            checks.append(CheckResult(self.CHECK_KNOT, False, (), "skipped: earlier invariant failed"))

        report = ValidationReport(complex_.name, tuple(checks))
        if not report.passed:
            logger.info(f"Complex {complex_.name!r} failed validation: "
                        f"{[c.name for c in report.checks if not c.passed]}")
        return report

    def _check_well_formed(self, complex_: FilteredComplex) -> CheckResult:
        offenders = []
        seen = set()
        for g in complex_.generators:
            if g.id in seen:
                offenders.append(f"duplicate id {g.id}")
            seen.add(g.id)
        for e in complex_.differential:
            for endpoint in (e.source, e.target):
                if endpoint not in seen:
                    offenders.append(f"edge {e.source}->{e.target} references unknown id {endpoint}")
        pairs = [(e.source, e.target) for e in complex_.differential]
        if len(pairs) != len(set(pairs)):
            offenders.append("repeated edge")
        return CheckResult(self.CHECK_IDS, not offenders, tuple(offenders))

    def _check_d_squared(self, complex_: FilteredComplex) -> CheckResult:
        d = self._differential_map(complex_)
        offenders = []
        for source, targets in d.items():
            total: Dict[str, int] = defaultdict(int)
            for middle, c in targets.items():
                for target, c2 in d.get(middle, {}).items():
                    total[target] += c * c2
            offenders.extend(f"d^2({source}) has {v}*{t}" for t, v in sorted(total.items()) if v)
        return CheckResult(self.CHECK_D_SQUARED, not offenders, tuple(offenders))

    def _check_maslov(self, complex_: FilteredComplex) -> CheckResult:
        gens = complex_.by_id
        offenders = tuple(
            f"{e.source}->{e.target}" for e in complex_.differential
            if gens[e.source].maslov - gens[e.target].maslov != 1
        )
        return CheckResult(self.CHECK_MASLOV, not offenders, offenders)

    def _check_filtration(self, complex_: FilteredComplex) -> CheckResult:
        gens = complex_.by_id
        offenders = tuple(
            f"{e.source}->{e.target}" for e in complex_.differential
            if gens[e.target].alexander > gens[e.source].alexander
        )
        return CheckResult(self.CHECK_FILTRATION, not offenders, offenders)

    def require_chain_complex(self, complex_: FilteredComplex) -> None:
        """Raises InvalidComplex unless every edge joins known generators and drops Maslov by one.

        The Alexander filtration and the knot condition are left to validate.
        """
        checks = [self._check_well_formed(complex_)]
        if checks[0].passed:
            checks.append(self._check_maslov(complex_))
        if not all(check.passed for check in checks):
            raise InvalidComplex(ValidationReport(complex_.name, tuple(checks)))

    def _check_knot_homology(self, complex_: FilteredComplex) -> CheckResult:
        total = self.total_homology(complex_)
        expected = GradedGroup({0: AbelianGroup.free(1)})
        if total == expected:
            return CheckResult(self.CHECK_KNOT, True)
        return CheckResult(self.CHECK_KNOT, False, (), f"total homology is {total}")

    # --- homology ---------------------------------------------------------

    @staticmethod
    def _differential_map(complex_: FilteredComplex) -> Dict[str, Dict[str, int]]:
        d: Dict[str, Dict[str, int]] = defaultdict(dict)
        for e in complex_.differential:
            d[e.source][e.target] = d[e.source].get(e.target, 0) + e.coefficient
        return d

    def graded_homology(self, complex_: FilteredComplex) -> GradedGroup:
        """Homology of the whole complex, by Maslov grading."""
        self.require_chain_complex(complex_)
        if complex_.is_empty():
            return GradedGroup()
        gens = complex_.by_id
        by_maslov: Dict[int, List[str]] = defaultdict(list)
        for g in complex_.generators:
            by_maslov[g.maslov].append(g.id)
        index = {gid: pos for ids in by_maslov.values() for pos, gid in enumerate(ids)}

        boundaries: Dict[int, Dict] = defaultdict(dict)
        for e in complex_.differential:
            block = boundaries[gens[e.source].maslov]
            key = (index[e.target], index[e.source])
            block[key] = block.get(key, 0) + e.coefficient

        def boundary(m: int) -> IntMatrix:
            return IntMatrix.from_dict(len(by_maslov.get(m - 1, ())), len(by_maslov.get(m, ())),
                                       boundaries.get(m, {}))

        groups = {}
        for m in sorted(by_maslov):
            groups[m] = homology_service.chain_homology(boundary(m + 1), boundary(m))
        return GradedGroup(groups)

    def total_homology(self, complex_: FilteredComplex) -> GradedGroup:
        return self.graded_homology(complex_)

    def filtration_subcomplex(self, complex_: FilteredComplex, level: int) -> FilteredComplex:
        self.require_chain_complex(complex_)
        return complex_.restrict([g for g in complex_.generators if g.alexander <= level],
                                 f"Filt({complex_.name},{level})")

    def quotient_complex(self, complex_: FilteredComplex, level: int) -> FilteredComplex:
        self.require_chain_complex(complex_)
        return complex_.restrict([g for g in complex_.generators if g.alexander > level],
                                 f"{complex_.name}/Filt({complex_.name},{level})")

    def filtration_homology(self, complex_: FilteredComplex, level: int) -> GradedGroup:
        return self.graded_homology(self.filtration_subcomplex(complex_, level))

    def quotient_homology(self, complex_: FilteredComplex, level: int) -> GradedGroup:
        return self.graded_homology(self.quotient_complex(complex_, level))

    def associated_graded(self, complex_: FilteredComplex) -> HFKTable:
        """HFK-hat: homology of each Alexander level using only grading-preserving edges."""
        self.require_chain_complex(complex_)
        rows = {}
        for level in sorted({g.alexander for g in complex_.generators}):
            layer = complex_.restrict([g for g in complex_.generators if g.alexander == level])
            rows[level] = self.graded_homology(layer)
        table = HFKTable.from_rows(rows)
        if table.has_torsion():
            warnings.warn(f"HFK of {complex_.name!r} has torsion", TorsionWarning)
            logger.warning(f"HFK of {complex_.name!r} has torsion")
        return table

    # --- tables -----------------------------------------------------------

    def degree(self, table: HFKTable) -> int:
        if table.is_empty():
            raise EmptyTable("Degree of an empty table is undefined")
        return max(i for i, _ in table)

    @staticmethod
    def reflect(alexander: int, maslov: int):
        """HFK_*(K, i) = HFK_{*-2i}(K, -i)."""
        return -alexander, maslov - 2 * alexander

    def symmetry_check(self, table: HFKTable) -> bool:
        for (i, m), group in table.items():
            if table[self.reflect(i, m)] != group:
                return False
        return True

    def symmetrize_table(self, half: HFKTable, source: str = "nonnegative") -> HFKTable:
        """Fills the other half of a table by the conjugation symmetry.

        source="nonnegative" reflects the i > 0 rows into i < 0, source="nonpositive"
        the other way. Entries at i = 0 are kept as given. Existing entries on the
        filled side must agree with the reflection.
        """
        if source == "nonnegative":
            is_source = lambda i: i > 0
        elif source == "nonpositive":
            is_source = lambda i: i < 0
        else:
            raise ValueError(f"Unknown symmetrization source {source!r}")

        result = {key: g for key, g in half.items() if is_source(key[0]) or key[0] == 0}
        reflected = {self.reflect(i, m): g for (i, m), g in half.items() if is_source(i)}
        for key, group in half.items():
            if is_source(key[0]) or key[0] == 0:
                continue
            if reflected.get(key) != group:
                raise ConflictingEntry(*key, f"Entry at (i={key[0]}, M={key[1]}) is {group} "
                                             f"but its reflection is {reflected.get(key, '0')}")
        result.update(reflected)
        return HFKTable(result)

    def mirror(self, complex_: FilteredComplex) -> FilteredComplex:
        """Dual complex with both gradings negated."""
        mirrored = FilteredComplex(
            tuple(Generator(g.id, -g.maslov, -g.alexander) for g in complex_.generators),
            tuple(Edge(e.target, e.source, e.coefficient) for e in complex_.differential),
            f"mirror({complex_.name})" if complex_.name else "mirror",
        )
        if self.total_homology(complex_).has_torsion() or any(
                self.filtration_homology(complex_, level).has_torsion()
                for level in sorted({g.alexander for g in complex_.generators})):
            message = (f"{complex_.name!r} has torsion in its filtered homology; the dual complex "
                       f"may differ from the mirror by universal-coefficient terms")
            warnings.warn(message, TorsionWarning)
            logger.warning(message)
        return mirrored


complex_service = ComplexService()
