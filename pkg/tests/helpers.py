from typing import Dict, Tuple

from models.algebra import AbelianGroup
from models.complex import HFKTable

Z = AbelianGroup.free(1)


def table_with_reflections(half: Dict[Tuple[int, int], AbelianGroup]) -> HFKTable:
    """Adds (-i, m - 2i) for every (i, m) with i != 0."""
    entries = dict(half)
    for (i, m), group in half.items():
        if i != 0:
            entries[(-i, m - 2 * i)] = group
    return HFKTable(entries)
