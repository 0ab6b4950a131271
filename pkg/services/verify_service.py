from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple
import logging
import warnings

from config import settings
from models.cabling import CableParams, PartialHFKTable
from models.complex import FilteredComplex, HFKTable
from models.enums import BoundSide, CheckStatus
from models.errors import HFKError, NotLargeN
from models.verify import VerifyCheck, VerifyReport
from .alexander_service import alexander_service
from .cabling_service import cabling_service
from .complex_service import complex_service

logger = logging.getLogger(__name__)

Check = Callable[[], VerifyCheck]


class VerifyService:
    """Runs the cross-checks between complex, cable table and Alexander polynomial."""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or settings.VERIFY_WORKERS

    def default_params(self, d: int) -> CableParams:
        n = cabling_service.large_n_bound(d) + settings.DEFAULT_VERIFY_N_OFFSET
        return CableParams(p=2, n=n)

    def run_verify(self, complex_: FilteredComplex, params: Optional[CableParams] = None) -> VerifyReport:
        validation = complex_service.validate(complex_)
        if not validation.passed:
            failed = [f"{c.name}: {c.detail or ', '.join(c.offenders)}" for c in validation.checks if not c.passed]
            return VerifyReport(name=complex_.name, checks=[
                VerifyCheck(name="validation", status=CheckStatus.FAIL, detail="; ".join(failed))
            ])
        checks = [VerifyCheck(name="validation", status=CheckStatus.PASS)]

        hfk = complex_service.associated_graded(complex_)
        d = complex_service.degree(hfk)
        params = params or self.default_params(d)

        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NotLargeN)
            try:
                cable = cabling_service.cable_table(complex_, params)
            except HFKError as e:
                checks.append(VerifyCheck(name="cable_table", status=CheckStatus.FAIL, detail=str(e)))
                return VerifyReport(name=complex_.name, checks=checks)
        if any(issubclass(w.category, NotLargeN) for w in caught):
            checks.append(VerifyCheck(name="large_n", status=CheckStatus.WARN,
                                      detail="large-n hypothesis unverified"))
        else:
            checks.append(VerifyCheck(name="large_n", status=CheckStatus.PASS,
                                      detail=str(cable.assumptions.get("large_n", ""))))

        jobs: List[Check] = [
            lambda: self._check_symmetry(hfk, cable),
            lambda: self._check_degree(d, params, cable),
            lambda: self._check_alexander_at_one(hfk),
            lambda: self._check_euler_triangle(hfk, params, cable),
        ]
        if params.n > 0:
            jobs.append(lambda: self._check_top_groups(complex_, params, cable))

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            checks.extend(executor.map(lambda job: job(), jobs))

        report = VerifyReport(name=complex_.name, checks=checks)
        logger.info(f"verify {complex_.name!r} p={params.p} n={params.n}: exit code {report.exit_code}")
        return report

    # --- individual checks ------------------------------------------------

    @staticmethod
    def _status(ok: bool) -> CheckStatus:
        return CheckStatus.PASS if ok else CheckStatus.FAIL

    def _check_symmetry(self, hfk: HFKTable, cable: PartialHFKTable) -> VerifyCheck:
        ok = complex_service.symmetry_check(hfk)
        detail = "HFK(K)"
        if cable.side == BoundSide.FULL:
            ok = ok and complex_service.symmetry_check(cable.table)
            detail += " and cable table"
        return VerifyCheck(name="symmetry", status=self._status(ok), detail=detail)

    def _check_degree(self, d: int, params: CableParams, cable: PartialHFKTable) -> VerifyCheck:
        expected = cabling_service.cable_degree(d, params.p, params.n)
        gradings = cable.table.alexander_gradings()
        if not gradings:
            return VerifyCheck(name="degree", status=CheckStatus.FAIL, detail="cable table is empty")
        if cable.side == BoundSide.BELOW:
            actual = -min(gradings)
        else:
            actual = max(gradings)
        return VerifyCheck(name="degree", status=self._status(actual == expected),
                           detail=f"expected {expected}, found {actual}")

    def _check_alexander_at_one(self, hfk: HFKTable) -> VerifyCheck:
        value = alexander_service.evaluate(alexander_service.euler_poly(hfk), 1)
        return VerifyCheck(name="alexander_at_one", status=self._status(abs(value) == 1),
                           detail=f"Delta(1) = {value}")

    def _check_euler_triangle(self, hfk: HFKTable, params: CableParams, cable: PartialHFKTable) -> VerifyCheck:
        delta_k = alexander_service.euler_poly(hfk)
        expected = alexander_service.cable_alexander(delta_k, params.p, params.p * params.n + 1)
        actual = alexander_service.euler_poly(cable.table)
        exponents = set(expected.coefficients) | set(actual.coefficients)
        mismatched: List[Tuple[int, int, int]] = [
            (e, actual.coeff(e), expected.coeff(e)) for e in sorted(exponents)
            if cable.in_range(e) and actual.coeff(e) != expected.coeff(e)
        ]
        detail = "coefficients agree" if not mismatched else f"(exponent, table, formula): {mismatched}"
        if cable.side != BoundSide.FULL:
            detail += f" on {cable.describe_range()}"
        return VerifyCheck(name="euler_triangle", status=self._status(not mismatched), detail=detail)

    def _check_top_groups(self, complex_: FilteredComplex, params: CableParams,
                          cable: PartialHFKTable) -> VerifyCheck:
        top, following, degree = cabling_service.top_groups(complex_, params.p, params.n)
        ok = cable.table.row(degree) == top and cable.table.row(degree - 1) == following
        return VerifyCheck(name="top_groups", status=self._status(ok),
                           detail=f"top {top}, next {following} at i = {degree}, {degree - 1}")


verify_service = VerifyService()
