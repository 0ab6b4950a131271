from typing import Dict, List, Set, Tuple
from math import gcd
import logging

import numpy as np

from config import settings
from models.algebra import AbelianGroup, IntMatrix
from models.errors import CompositionNonzero, DimensionMismatch

logger = logging.getLogger(__name__)


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _nearest_quotient(b: int, a: int) -> int:
    """q minimizing |b - q*a|."""
    q, rem = divmod(b, a)
    if 2 * abs(rem) > abs(a):
        q += 1 if (rem > 0) == (a > 0) else -1
    return q


class _SparseReducer:
    """Row/column reduction state for one Smith normal form computation.

    rows[r] maps column -> value; col_support[c] is the set of rows with an
    entry in column c. left[r] is row r of the accumulated row transform and
    right[c] is column c of the accumulated column transform.
    """

    def __init__(self, matrix: IntMatrix):
        self.n_rows = matrix.rows
        self.n_cols = matrix.cols
        self.rows: Dict[int, Dict[int, int]] = {r: {} for r in range(matrix.rows)}
        self.col_support: Dict[int, Set[int]] = {c: set() for c in range(matrix.cols)}
        for r, c, v in matrix.entries:
            self.rows[r][c] = v
            self.col_support[c].add(r)
        self.left: Dict[int, Dict[int, int]] = {r: {r: 1} for r in range(matrix.rows)}
        self.right: Dict[int, Dict[int, int]] = {c: {c: 1} for c in range(matrix.cols)}

    def _set(self, r: int, c: int, value: int):
        if value:
            self.rows[r][c] = value
            self.col_support[c].add(r)
        else:
            self.rows[r].pop(c, None)
            self.col_support[c].discard(r)

    @staticmethod
    def _axpy(target: Dict[int, int], source: Dict[int, int], k: int):
        for key, v in source.items():
            value = target.get(key, 0) + k * v
            if value:
                target[key] = value
            else:
                target.pop(key, None)

    def add_row(self, target: int, source: int, k: int):
        """row[target] += k * row[source]."""
        for c, v in list(self.rows[source].items()):
            self._set(target, c, self.rows[target].get(c, 0) + k * v)
        self._axpy(self.left[target], self.left[source], k)

    def add_col(self, target: int, source: int, k: int):
        """col[target] += k * col[source]."""
        for r in list(self.col_support[source]):
            self._set(r, target, self.rows[r].get(target, 0) + k * self.rows[r][source])
        self._axpy(self.right[target], self.right[source], k)

    def choose_pivot(self, active_rows: Set[int]) -> Tuple[int, int]:
        best = None
        best_key = None
        for r in sorted(active_rows):
            row = self.rows[r]
            for c, v in row.items():
                # Markowitz cost, with unit pivots always ranked first
                cost = (len(row) - 1) * (len(self.col_support[c]) - 1)
                key = (abs(v) != 1, cost, abs(v), r, c)
                if best_key is None or key < best_key:
                    best, best_key = (r, c), key
        return best

    def eliminate(self, r: int, c: int) -> Tuple[int, int]:
        """Clears row r and column c except the pivot; the pivot may move to a smaller entry."""
        while True:
            a = self.rows[r][c]
            moved = False
            for i in sorted(self.col_support[c] - {r}):
                b = self.rows[i][c]
                self.add_row(i, r, -_nearest_quotient(b, a))
                remainder = self.rows[i].get(c, 0)
                if remainder:
                    r, moved = i, True
                    break
            if moved:
                continue
            for j in sorted(set(self.rows[r]) - {c}):
                b = self.rows[r][j]
                self.add_col(j, c, -_nearest_quotient(b, a))
                remainder = self.rows[r].get(j, 0)
                if remainder:
                    c, moved = j, True
                    break
            if not moved:
                return r, c


class HomologyService:
    def __init__(self):
        self.dense_cutoff = settings.DENSE_CUTOFF

    def smith_normal_form(self, matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
        """Returns (D, U, V) with U * M * V = D, D diagonal with d_i | d_{i+1}, U and V unimodular."""
        state = _SparseReducer(matrix)
        active_rows = {r for r in range(matrix.rows) if state.rows[r]}
        pivots: List[Tuple[int, int]] = []

        while active_rows:
            r, c = state.choose_pivot(active_rows)
            r, c = state.eliminate(r, c)
            pivots.append((r, c))
            active_rows.discard(r)
            active_rows = {row for row in active_rows if state.rows[row]}

        logger.debug(f"SNF of {matrix.rows}x{matrix.cols} matrix ({len(matrix.entries)} entries): rank {len(pivots)}")

        pivot_rows = [r for r, _ in pivots]
        pivot_cols = [c for _, c in pivots]
        row_order = pivot_rows + [r for r in range(matrix.rows) if r not in set(pivot_rows)]
        col_order = pivot_cols + [c for c in range(matrix.cols) if c not in set(pivot_cols)]

        diag = [state.rows[r][c] for r, c in pivots]
        left = [dict(state.left[r]) for r in row_order]
        right = [dict(state.right[c]) for c in col_order]

        self._normalize_diagonal(diag, left, right)

        D = IntMatrix(matrix.rows, matrix.cols, tuple((i, i, d) for i, d in enumerate(diag)))
        U = IntMatrix(matrix.rows, matrix.rows, tuple(
            (i, j, v) for i, row in enumerate(left) for j, v in row.items()
        ))
        V = IntMatrix(matrix.cols, matrix.cols, tuple(
            (i, j, v) for j, col in enumerate(right) for i, v in col.items()
        ))
        return D, U, V

    @staticmethod
    def _normalize_diagonal(diag: List[int], left: List[Dict[int, int]], right: List[Dict[int, int]]):
        """Makes the diagonal positive and turns it into a divisibility chain in place."""
        for i, d in enumerate(diag):
            if d < 0:
                diag[i] = -d
                left[i] = {k: -v for k, v in left[i].items()}

        def combine(row_a, row_b, x, y):
            out = {}
            for k in set(row_a) | set(row_b):
                value = x * row_a.get(k, 0) + y * row_b.get(k, 0)
                if value:
                    out[k] = value
            return out

        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a == 0:
                    continue
                g, s, t = _extended_gcd(a, b)
                # [[s, t], [-b/g, a/g]] diag(a, b) [[1, -t b/g], [1, s a/g]] = diag(g, ab/g)
                new_i = combine(left[i], left[j], s, t)
                new_j = combine(left[i], left[j], -b // g, a // g)
                left[i], left[j] = new_i, new_j
                col_i = combine(right[i], right[j], 1, 1)
                col_j = combine(right[i], right[j], -t * b // g, s * a // g)
                right[i], right[j] = col_i, col_j
                diag[i], diag[j] = g, a * b // g

    def verify_snf(self, matrix: IntMatrix, D: IntMatrix, U: IntMatrix, V: IntMatrix) -> bool:
        """Checks U*M*V == D, |det U| = |det V| = 1 and the divisibility chain."""
        if not D.is_diagonal():
            return False
        diag = [d for d in D.diagonal() if d]
        if any(d < 0 for d in diag) or any(b % a for a, b in zip(diag, diag[1:])):
            return False
        if max(matrix.rows, matrix.cols) < self.dense_cutoff:
            product = U.to_dense().dot(matrix.to_dense()).dot(V.to_dense())
            if not np.array_equal(product, D.to_dense()):
                return False
        elif (U @ matrix @ V) != D:
            return False
        return abs(self.determinant(U)) == 1 and abs(self.determinant(V)) == 1

    def determinant(self, matrix: IntMatrix) -> int:
        if matrix.rows != matrix.cols:
            raise DimensionMismatch(f"Determinant of non-square {matrix.rows}x{matrix.cols} matrix")
        D, _, _ = self.smith_normal_form(matrix)
        diag = D.diagonal()
        result = 1
        for d in diag:
            result *= d
        # SNF only determines |det|; sign is irrelevant to unimodularity
        return result

    def rank(self, matrix: IntMatrix) -> int:
        D, _, _ = self.smith_normal_form(matrix)
        return sum(1 for d in D.diagonal() if d)

    def chain_homology(self, boundary_in: IntMatrix, boundary_out: IntMatrix) -> AbelianGroup:
        """ker(boundary_out) / im(boundary_in).

        boundary_in maps C_{k+1} -> C_k (shape dim C_k x dim C_{k+1}),
        boundary_out maps C_k -> C_{k-1} (shape dim C_{k-1} x dim C_k).
        """
        if boundary_in.rows != boundary_out.cols:
            raise DimensionMismatch(
                f"Incoming boundary has {boundary_in.rows} rows but outgoing boundary has {boundary_out.cols} columns"
            )
        if not (boundary_out @ boundary_in).is_zero():
            raise CompositionNonzero("Boundary maps do not compose to zero")

        middle = boundary_in.rows
        out_rank = self.rank(boundary_out)
        D_in, _, _ = self.smith_normal_form(boundary_in)
        in_factors = [d for d in D_in.diagonal() if d]
        return AbelianGroup.from_cyclic_orders(
            middle - out_rank - len(in_factors),
            [d for d in in_factors if d > 1],
        )


homology_service = HomologyService()
