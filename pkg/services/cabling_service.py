from typing import Any, Dict, Optional, Tuple
import logging
import warnings

from config import settings
from models.algebra import AbelianGroup, GradedGroup
from models.cabling import CableParams, PartialHFKTable
from models.complex import FilteredComplex, HFKTable
from models.enums import BoundSide
from models.errors import InvalidComplex, NotLargeN, TorsionWarning, ZeroParameter
from .complex_service import complex_service

logger = logging.getLogger(__name__)

TableEntries = Dict[Tuple[int, int], AbelianGroup]


class CablingService:
    """HFK of (p, pn+1) cables read off the filtration of the companion's complex.

    Above the degree-dependent threshold the cable's groups are the homology of
    Filt(K, j) (n > 0) or of the quotients CFK/Filt(K, j) (n < 0), shifted in
    Maslov grading, in two consecutive Alexander gradings out of every p.
    """

    # --- closed formulas --------------------------------------------------

    @staticmethod
    def cable_degree(d: int, p: int, n: int) -> int:
        """Degree of HFK of the (p, pn+1) cable of a knot whose HFK has degree d."""
        if n == 0:
            raise ZeroParameter("cable_degree needs n != 0")
        if n > 0:
            return p * d + (p - 1) * p * n // 2
        return p * d + (p - 1) * (p * abs(n) - 2) // 2

    def threshold_c(self, d: int, p: int, n: int, c_prime: int) -> int:
        """Alexander grading above which (n > 0) or below minus which (n < 0) the formulas hold.

        For n < 0 two exterior generators cancel, so |n| - 1 takes the place of n.
        """
        degree = self.cable_degree(d, p, n)
        if n > 0:
            return degree - p * (n - c_prime) - 1
        return degree - p * (abs(n) - 1 - c_prime) - 1

    @staticmethod
    def large_n_bound(d: int) -> int:
        """Heuristic N beyond which n counts as large."""
        return settings.LARGE_N_FACTOR * d

    # --- helpers ----------------------------------------------------------

    def _companion_degree(self, complex_: FilteredComplex) -> int:
        report = complex_service.validate(complex_)
        if not report.passed:
            raise InvalidComplex(report)
        return complex_service.degree(complex_service.associated_graded(complex_))

    def _large_n_assumption(self, complex_: FilteredComplex, d: int, n: int, override: bool) -> Dict[str, Any]:
        bound = self.large_n_bound(d)
        if abs(n) > bound:
            return {"large_n": "satisfied", "large_n_bound": bound, "status": "theorem"}
        if override:
            logger.info(f"|n|={abs(n)} <= N={bound} for {complex_.name!r}; large-n hypothesis assumed by override")
            return {"large_n": "assumed (override)", "large_n_bound": bound, "status": "theorem"}
        message = (f"large-n hypothesis unverified: |n|={abs(n)} <= N={bound} for {complex_.name!r}; "
                   f"values are conjectural")
        warnings.warn(message, NotLargeN)
        logger.warning(message)
        return {"large_n": "unverified", "large_n_bound": bound, "status": "conjectural"}

    @staticmethod
    def _put(entries: TableEntries, alexander: int, maslov: int, group: AbelianGroup):
        key = (alexander, maslov)
        entries[key] = entries[key] + group if key in entries else group

    def _copy_shifted(self, entries: TableEntries, alexander: int, homology: GradedGroup, shift: int):
        for h, group in homology.items():
            self._put(entries, alexander, h + shift, group)

    @staticmethod
    def _flag_torsion(complex_: FilteredComplex, homology: GradedGroup, level: int, metadata: Dict[str, Any]):
        if homology.has_torsion() and not metadata.get("torsion"):
            metadata["torsion"] = True
            message = f"Filtration level {level} of {complex_.name!r} has torsion; cable groups carry it unchanged"
            warnings.warn(message, TorsionWarning)
            logger.warning(message)

    # --- cable tables -----------------------------------------------------

    def cable2_hfk(self, complex_: FilteredComplex, n: int, large_n_override: bool = False) -> HFKTable:
        """Full HFK table of the (2, 2n+1) cable, n > 0."""
        if n <= 0:
            raise ZeroParameter(f"cable2_hfk needs n > 0, got {n}")
        d = self._companion_degree(complex_)
        metadata: Dict[str, Any] = {"operation": "cable2_hfk", "p": 2, "n": n, "companion_degree": d,
                                    "large_n_override": large_n_override}
        metadata.update(self._large_n_assumption(complex_, d, n, large_n_override))

        # i = top - 2k carries H(Filt(K, k - d)) shifted down by 2(k - d), and
        # i - 1 the same group one Maslov grading lower
        top = 2 * d + n
        entries: TableEntries = {}
        for k in range(top // 2 + 1):
            i = top - 2 * k
            level = k - d
            homology = complex_service.filtration_homology(complex_, level)
            self._flag_torsion(complex_, homology, level, metadata)
            self._copy_shifted(entries, i, homology, -2 * (k - d))
            if i - 1 >= 0:
                self._copy_shifted(entries, i - 1, homology, -2 * (k - d) - 1)

        logger.debug(f"cable2_hfk({complex_.name!r}, n={n}): {len(entries)} nonnegative entries, degree {top}")
        table = complex_service.symmetrize_table(HFKTable(entries), source="nonnegative")
        return HFKTable(table.entries, metadata)

    def cablep_hfk(self, complex_: FilteredComplex, params: CableParams) -> PartialHFKTable:
        """HFK of the (p, pn+1) cable for n > 0 on i > threshold_c."""
        if params.n < 0:
            raise ValueError("cablep_hfk needs n > 0; use cablep_neg_hfk")
        p, n = params.p, params.n
        d = self._companion_degree(complex_)
        assumptions = self._assumptions(complex_, d, params)
        c_prime = assumptions["c_prime"]

        degree = self.cable_degree(d, p, n)
        c = self.threshold_c(d, p, n, c_prime)
        # every p-th grading from the top repeats the n > 0 pattern until the threshold
        entries: TableEntries = {}
        k = 0
        while degree - p * k > c:
            i = degree - p * k
            level = k - d
            homology = complex_service.filtration_homology(complex_, level)
            self._flag_torsion(complex_, homology, level, assumptions)
            self._copy_shifted(entries, i, homology, -2 * (k - d))
            if i - 1 > c:
                self._copy_shifted(entries, i - 1, homology, -2 * (k - d) - 1)
            k += 1

        logger.debug(f"cablep_hfk({complex_.name!r}, p={p}, n={n}): degree {degree}, valid for i > {c}")
        table = HFKTable(entries, dict(assumptions, operation="cablep_hfk"))
        return PartialHFKTable(table, BoundSide.ABOVE, c, assumptions)

    def cablep_neg_hfk(self, complex_: FilteredComplex, params: CableParams) -> PartialHFKTable:
        """HFK of the (p, pn+1) cable for n < 0 on i < -threshold_c.

        For p = 2 with a negative threshold the i <= 0 half is completed by
        symmetry into the full table.
        """
        if params.n > 0:
            raise ValueError("cablep_neg_hfk needs n < 0; use cablep_hfk")
        p, n = params.p, params.n
        d = self._companion_degree(complex_)
        assumptions = self._assumptions(complex_, d, params)
        c_prime = assumptions["c_prime"]

        degree = self.cable_degree(d, p, n)
        c = self.threshold_c(d, p, n, c_prime)
        # walk up from the bottom grading -degree using the quotients C/Filt(K, d - k - 1)
        full = p == 2 and c < 0
        limit = 1 if full else -c

        entries: TableEntries = {}
        k = 0
        while k * p - degree < limit:
            i = k * p - degree
            level = d - k - 1
            homology = complex_service.quotient_homology(complex_, level)
            self._flag_torsion(complex_, homology, level, assumptions)
            self._copy_shifted(entries, i, homology, -2 * (d - k))
            if i + 1 < limit:
                self._copy_shifted(entries, i + 1, homology, -2 * (d - k) + 1)
            k += 1

        logger.debug(f"cablep_neg_hfk({complex_.name!r}, p={p}, n={n}): degree {degree}, "
                     f"{'full table' if full else f'valid for i < {-c}'}")
        metadata = dict(assumptions, operation="cablep_neg_hfk")
        if full:
            table = complex_service.symmetrize_table(HFKTable(entries), source="nonpositive")
            return PartialHFKTable(HFKTable(table.entries, metadata), BoundSide.FULL, c, assumptions)
        return PartialHFKTable(HFKTable(entries, metadata), BoundSide.BELOW, c, assumptions)

    def _assumptions(self, complex_: FilteredComplex, d: int, params: CableParams) -> Dict[str, Any]:
        assumptions: Dict[str, Any] = {"p": params.p, "n": params.n, "companion_degree": d,
                                       "large_n_override": params.large_n_override}
        if params.c_prime is None:
            # CableParams only allows this for p = 2
            assumptions["c_prime"] = 0
            assumptions["c_prime_defaulted"] = True
        else:
            assumptions["c_prime"] = params.c_prime
        assumptions.update(self._large_n_assumption(complex_, d, params.n, params.large_n_override))
        return assumptions

    # --- corollaries ------------------------------------------------------

    def top_groups(self, complex_: FilteredComplex, p: int, n: int) -> Tuple[GradedGroup, GradedGroup, int]:
        """Top group of the (p, pn+1) cable, the group one grading below it, and the cable's degree.

        The top group is HFK(K, d) and the next one is the same group with
        Maslov grading lowered by one.
        """
        d = self._companion_degree(complex_)
        top = complex_service.associated_graded(complex_).row(d)
        return top, top.shift(-1), self.cable_degree(d, p, n)

    def cable_table(self, complex_: FilteredComplex, params: CableParams) -> PartialHFKTable:
        """Dispatches on (p, sign of n) to the theorem that covers it."""
        if params.n < 0:
            return self.cablep_neg_hfk(complex_, params)
        if params.p == 2:
            # full table; the threshold is reported for the record only
            table = self.cable2_hfk(complex_, params.n, params.large_n_override)
            assumptions = {key: value for key, value in table.metadata.items() if key != "operation"}
            d = table.metadata["companion_degree"]
            c_prime = params.c_prime if params.c_prime is not None else 0
            return PartialHFKTable(table, BoundSide.FULL, self.threshold_c(d, 2, params.n, c_prime), assumptions)
        return self.cablep_hfk(complex_, params)


cabling_service = CablingService()
