# models/algebra.py
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

Entry = Tuple[int, int, int]


@dataclass(frozen=True)
class IntMatrix:
    """Sparse integer matrix stored as sorted (row, col, value) triplets.

    Values are plain Python ints, so entries never overflow.
    """
    rows: int
    cols: int
    entries: Tuple[Entry, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Negative shape {self.rows}x{self.cols}")
        seen = set()
        cleaned: List[Entry] = []
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"Entry ({r}, {c}) outside {self.rows}x{self.cols} matrix")
            if (r, c) in seen:
                raise ValueError(f"Duplicate entry at ({r}, {c})")
            seen.add((r, c))
            if v != 0:
                cleaned.append((int(r), int(c), int(v)))
        object.__setattr__(self, "entries", tuple(sorted(cleaned)))

    @classmethod
    def from_dict(cls, rows: int, cols: int, values: Dict[Tuple[int, int], int]) -> "IntMatrix":
        return cls(rows, cols, tuple((r, c, v) for (r, c), v in values.items()))

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        n_rows = len(data)
        n_cols = cols if cols is not None else (len(data[0]) if n_rows else 0)
        return cls(n_rows, n_cols, tuple(
            (r, c, int(v)) for r, row in enumerate(data) for c, v in enumerate(row) if v
        ))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple((i, i, 1) for i in range(n)))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_dict(self) -> Dict[Tuple[int, int], int]:
        return {(r, c): v for r, c, v in self.entries}

    def to_dense(self) -> np.ndarray:
        """Dense copy with dtype=object so entries stay arbitrary precision."""
        dense = np.zeros((self.rows, self.cols), dtype=object)
        for r, c, v in self.entries:
            dense[r, c] = v
        return dense

    def is_zero(self) -> bool:
        return not self.entries

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "IntMatrix":
        """Row k of the result is row row_order[k] of self; same for columns."""
        row_pos = {old: new for new, old in enumerate(row_order)}
        col_pos = {old: new for new, old in enumerate(col_order)}
        return IntMatrix(self.rows, self.cols, tuple(
            (row_pos[r], col_pos[c], v) for r, c, v in self.entries
        ))

    def diagonal(self) -> List[int]:
        values = self.to_dict()
        return [values.get((i, i), 0) for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(r == c for r, c, _ in self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        right_rows: Dict[int, List[Tuple[int, int]]] = {}
        for r, c, v in other.entries:
            right_rows.setdefault(r, []).append((c, v))
        product: Dict[Tuple[int, int], int] = {}
        for r, k, v in self.entries:
            for c, w in right_rows.get(k, ()):
                product[(r, c)] = product.get((r, c), 0) + v * w
        return IntMatrix.from_dict(self.rows, other.cols, product)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank plus torsion invariant factors d_1 | d_2 | ... (each >= 2)."""
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"Torsion factor {d} must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"Torsion factors {self.torsion} violate the divisibility chain")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @classmethod
    def from_cyclic_orders(cls, free_rank: int, orders: Iterable[int]) -> "AbelianGroup":
        """Builds the group Z^free_rank + sum Z/n for arbitrary orders n (0 means Z)."""
        factors = []
        for n in orders:
            n = abs(int(n))
            if n == 0:
                free_rank += 1
            elif n > 1:
                factors.append(n)
        return cls(free_rank, tuple(invariant_factors(factors)))

    @classmethod
    def zero(cls) -> "AbelianGroup":
        return cls()

    @classmethod
    def free(cls, rank: int = 1) -> "AbelianGroup":
        return cls(rank)

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def has_torsion(self) -> bool:
        return bool(self.torsion)

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_cyclic_orders(self.free_rank + other.free_rank,
                                               self.torsion + other.torsion)

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return self.direct_sum(other)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts)


def invariant_factors(orders: Iterable[int]) -> List[int]:
    """Rewrites a list of cyclic orders as a divisibility chain (gcd/lcm exchange)."""
    values = sorted(abs(n) for n in orders if abs(n) > 1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = gcd(values[i], values[j])
            values[i], values[j] = g, values[i] * values[j] // g
    return [v for v in values if v > 1]


@dataclass(frozen=True)
class GradedGroup:
    """Maslov grading -> nonzero AbelianGroup."""
    groups: Dict[int, AbelianGroup] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "groups", {
            m: g for m, g in sorted(self.groups.items()) if not g.is_zero()
        })

    def __getitem__(self, maslov: int) -> AbelianGroup:
        return self.groups.get(maslov, AbelianGroup.zero())

    def __iter__(self) -> Iterator[int]:
        return iter(self.groups)

    def items(self):
        return self.groups.items()

    def is_zero(self) -> bool:
        return not self.groups

    def has_torsion(self) -> bool:
        return any(g.has_torsion() for g in self.groups.values())

    def shift(self, amount: int) -> "GradedGroup":
        return GradedGroup({m + amount: g for m, g in self.groups.items()})

    def direct_sum(self, other: "GradedGroup") -> "GradedGroup":
        merged = dict(self.groups)
        for m, g in other.groups.items():
            merged[m] = merged[m] + g if m in merged else g
        return GradedGroup(merged)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (m % 2) * g.free_rank for m, g in self.groups.items())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"({g})_{m}" for m, g in sorted(self.groups.items(), reverse=True))
