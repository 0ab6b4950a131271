from typing import Callable, Dict, List, Optional, Sequence, Tuple
from collections import deque
import logging

from models.algebra import AbelianGroup
from models.complex import Edge, FilteredComplex, Generator, HFKTable
from models.disks import DiskDatum, Grading, GradingAssignment
from models.errors import DisconnectedGraph, InconsistentDisks, ZeroParameter
from .complex_service import complex_service

logger = logging.getLogger(__name__)

Z = AbelianGroup.free(1)

# (3,7) diagram: nonnegative half of the table, Alexander grading -> Maslov grading
T37_HALF = {6: 0, 5: -1, 3: -2, 2: -3, 0: -4}


class TorusService:
    """Built-in torus knot inputs: closed-form tables, staircase complexes and disk data."""

    # --- relative gradings from disks ---------------------------------------

    def propagate_gradings(self, ids: Sequence[str], disks: Sequence[DiskDatum],
                           anchor: Tuple[str, int, int, int]) -> GradingAssignment:
        """Solves gr(x)-gr(y) = mu - 2n_w, F(x)-F(y) = n_z - n_w, F'(x)-F'(y) = n_z' - n_w.

        anchor is (id, gr, F, F'). Filtrations must reach every generator;
        Maslov gradings only reachable through unconstrained records stay None.
        """
        anchor_id, anchor_gr, anchor_f, anchor_fp = anchor
        known = set(ids)
        for disk in disks:
            for endpoint in (disk.from_id, disk.to_id):
                if endpoint not in known:
                    raise DisconnectedGraph(f"Disk {disk.from_id}->{disk.to_id} references unknown generator {endpoint}")
        if anchor_id not in known:
            raise DisconnectedGraph(f"Anchor {anchor_id} is not a generator")

        filt_z = self._solve(ids, disks, anchor_id, anchor_f, lambda d: d.n_z - d.n_w, "F")
        filt_zp = self._solve(ids, disks, anchor_id, anchor_fp, lambda d: d.n_zprime - d.n_w, "F'")
        maslov_disks = [d for d in disks if not d.maslov_unconstrained]
        maslov = self._solve(ids, maslov_disks, anchor_id, anchor_gr,
                             lambda d: d.maslov_index - 2 * d.n_w, "gr")

        missing = [gid for gid in ids if gid not in filt_z]
        if missing:
            raise DisconnectedGraph(f"Generators {missing} are not connected to {anchor_id} by any disk")
        if len(maslov) < len(ids):
            logger.debug(f"Maslov grading left undetermined for {sorted(set(ids) - set(maslov))}")

        return GradingAssignment(gradings={
            gid: Grading(maslov=maslov.get(gid), filt_z=filt_z[gid], filt_zprime=filt_zp[gid])
            for gid in ids
        })

    @staticmethod
    def _solve(ids: Sequence[str], disks: Sequence[DiskDatum], anchor_id: str, anchor_value: int,
               difference: Callable[[DiskDatum], int], label: str) -> Dict[str, int]:
        """Breadth-first propagation of value(from) - value(to) = difference(disk)."""
        neighbours: Dict[str, List[Tuple[str, int]]] = {gid: [] for gid in ids}
        for disk in disks:
            delta = difference(disk)
            neighbours[disk.from_id].append((disk.to_id, -delta))
            neighbours[disk.to_id].append((disk.from_id, delta))

        values = {anchor_id: anchor_value}
        queue = deque([anchor_id])
        while queue:
            current = queue.popleft()
            for other, step in neighbours[current]:
                value = values[current] + step
                if other not in values:
                    values[other] = value
                    queue.append(other)
                elif values[other] != value:
                    raise InconsistentDisks(
                        f"{label}({other}) is {values[other]} along one path and {value} along another"
                    )
        return values

    def spiral_disks(self, n: int) -> Tuple[List[str], List[DiskDatum]]:
        """Generators and disks of the genus one spiral diagram for T(2,2n+1), n > 0."""
        if n <= 0:
            raise ZeroParameter(f"Spiral diagram is only modelled for n > 0, got {n}")
        ids = [f"x{j}" for j in range(2 * n + 1)]
        disks = []
        for i in range(1, 2 * n, 2):
            disks.append(DiskDatum(from_id=f"x{i}", to_id=f"x{i - 1}", maslov_index=1, n_w=1, n_zprime=0))
            disks.append(DiskDatum(from_id=f"x{i}", to_id=f"x{i + 1}", maslov_index=1, n_w=0, n_zprime=1))
        return ids, disks

    def t37_disks(self) -> Tuple[List[str], List[DiskDatum]]:
        """The (3,7) diagram: six holomorphic disks and two null-homologies."""
        ids = [f"x{j}" for j in range(9)]
        disks = [
            DiskDatum(from_id="x1", to_id="x0", maslov_index=1, n_w=1),
            DiskDatum(from_id="x3", to_id="x2", maslov_index=1, n_w=1),
            DiskDatum(from_id="x1", to_id="x2", maslov_index=1, n_zprime=2),
            DiskDatum(from_id="x3", to_id="x4", maslov_index=1, n_zprime=2),
            DiskDatum(from_id="x5", to_id="x6", maslov_index=1, n_zprime=1),
            DiskDatum(from_id="x7", to_id="x8", maslov_index=1, n_zprime=1),
            DiskDatum.null_homology("x4", "x6", n_zprime=3),
            DiskDatum.null_homology("x5", "x7", n_zprime=3),
        ]
        return ids, disks

    def table_from_gradings(self, assignment: GradingAssignment) -> HFKTable:
        """HFK table of a diagram whose generators sit in pairwise distinct filtration levels.

        Uses the z' filtration as Alexander grading, keeps the i >= 0 half and
        completes it by symmetry.
        """
        levels = [g.filt_zprime for g in assignment.gradings.values()]
        if len(levels) != len(set(levels)):
            raise InconsistentDisks("Generators share a filtration level; the table is not determined by gradings alone")
        half = {}
        for gid, grading in assignment.gradings.items():
            if grading.filt_zprime < 0:
                continue
            if grading.maslov is None:
                raise DisconnectedGraph(f"Maslov grading of {gid} is undetermined")
            half[(grading.filt_zprime, grading.maslov)] = Z
        return complex_service.symmetrize_table(HFKTable(half))

    # --- closed forms -------------------------------------------------------

    def hfk_torus_2(self, n: int) -> HFKTable:
        """HFK of T(2,2n+1)."""
        if n >= 0:
            return HFKTable({(i, i - n): Z for i in range(-n, n + 1)})
        top = -n - 1
        return HFKTable({(i, i - n - 1): Z for i in range(-top, top + 1)})

    def hfk_torus_3_7(self) -> HFKTable:
        """HFK of T(3,7): the five groups with i >= 0, completed by symmetry."""
        half = HFKTable({(i, m): Z for i, m in T37_HALF.items()})
        return complex_service.symmetrize_table(half)

    @staticmethod
    def torus_degree(p: int, q: int) -> int:
        """Genus of T(p,q)."""
        return (abs(p) - 1) * (abs(q) - 1) // 2

    def staircase_T2(self, m: int) -> FilteredComplex:
        """Filtered complex of T(2,2m+1) for m > 0, and of its mirror T(2,2m-1) for m < 0.

        For m > 0 the generators are x0..x2m with maslov(xj) = -j and
        alexander(xj) = m - j, and d(xj) = x(j+1) for odd j. This is the only
        choice with Maslov and Alexander drop 1, total homology Z in Maslov 0
        and associated graded equal to the T(2,2m+1) table.
        """
        if m == 0:
            raise ZeroParameter("staircase_T2 needs m != 0")
        if m < 0:
            mirrored = complex_service.mirror(self.staircase_T2(-m))
            return FilteredComplex(mirrored.generators, mirrored.differential, f"T(2,{2 * m - 1})")
        generators = tuple(Generator(f"x{j}", -j, m - j) for j in range(2 * m + 1))
        edges = tuple(Edge(f"x{j}", f"x{j + 1}", 1) for j in range(1, 2 * m, 2))
        return FilteredComplex(generators, edges, f"T(2,{2 * m + 1})")

    def unknot(self) -> FilteredComplex:
        """One generator in bigrading (0, 0) and no differential."""
        return FilteredComplex((Generator("x0", 0, 0),), (), "unknot")

    # --- (2, 2n+-1) cables of T(2, 2m+-1) ---------------------------------

    @staticmethod
    def torus_cable_bound(m: int, n: int) -> bool:
        """Whether n lies in the range where the closed-form cable tables are proven."""
        if m == 0 or n == 0:
            return False
        if m > 0 and n > 0:
            return n > 10 * m
        if m < 0 and n > 0:
            return n > 6 * abs(m) + 1
        if m > 0 and n < 0:
            return n < -6 * m - 1
        return n < -10 * abs(m)

    def torus_cable_table(self, m: int, n: int) -> HFKTable:
        """Closed-form HFK of the (2,2n+1) cable (n > 0) or (2,2n-1) cable (n < 0).

        The companion is T(2,2m+1) for m > 0 and T(2,2m-1) for m < 0, matching
        staircase_T2(m). A (2,2n-1) cable with n < 0 is the (2, 2(n-1)+1) cable.
        """
        if m == 0 or n == 0:
            raise ZeroParameter("torus_cable_table needs m != 0 and n != 0")
        if not self.torus_cable_bound(m, n):
            raise ValueError(f"n={n} is outside the proven range for m={m}")
        a, big_n = abs(m), abs(n)
        entries: Dict[Tuple[int, int], AbelianGroup] = {}

        def put(i: int, maslov: int):
            entries[(i, maslov)] = entries[(i, maslov)] + Z if (i, maslov) in entries else Z

        if n > 0:
            # the top 4a gradings follow the companion; below them a single staircase of Z's
            top = 2 * a + n
            for k in range(a):
                if m > 0:
                    put(top - 4 * k, -2 * k)
                    put(top - 4 * k - 1, -2 * k - 1)
                else:
                    put(top - 4 * k, 2 * a - 4 * k)
                    put(top - 4 * k - 1, 2 * a - 4 * k - 1)
                    put(top - 4 * k - 2, 2 * a - 2 * k - 1)
                    put(top - 4 * k - 2, 2 * a - 4 * k - 2)
                    put(top - 4 * k - 3, 2 * a - 2 * k - 2)
                    put(top - 4 * k - 3, 2 * a - 4 * k - 3)
            for i in range(0, n - 2 * a + 1):
                put(i, i - n)
            return complex_service.symmetrize_table(HFKTable(entries), source="nonnegative")

        # n < 0: the same layout read from the bottom grading upwards
        bottom = -2 * a - big_n
        for k in range(a):
            if m > 0:
                put(bottom + 4 * k, -2 * a + 4 * k)
                put(bottom + 4 * k + 1, -2 * a + 4 * k + 1)
                put(bottom + 4 * k + 2, -2 * a + 2 * k + 1)
                put(bottom + 4 * k + 2, -2 * a + 4 * k + 2)
                put(bottom + 4 * k + 3, -2 * a + 2 * k + 2)
                put(bottom + 4 * k + 3, -2 * a + 4 * k + 3)
            else:
                put(bottom + 4 * k, 2 * k)
                put(bottom + 4 * k + 1, 2 * k + 1)
        for i in range(2 * a - big_n, 1):
            put(i, i + big_n)
        return complex_service.symmetrize_table(HFKTable(entries), source="nonpositive")


torus_service = TorusService()
