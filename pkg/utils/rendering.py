import csv
import io
from typing import List, Union

from config import settings
from models.cabling import PartialHFKTable
from models.complex import HFKTable
from models.enums import TableFormat
from .file_io import dump_table

BOLD = "\033[1m"
DIM = "\033[2m"
RESET = "\033[0m"


def color_enabled(stream) -> bool:
    return not settings.HFK_CABLE_NO_COLOR and hasattr(stream, "isatty") and stream.isatty()


def render_table(table: Union[HFKTable, PartialHFKTable], fmt: TableFormat = TableFormat.GRID,
                 name: str = "", color: bool = False) -> str:
    fmt = TableFormat(fmt)
    if fmt == TableFormat.JSON:
        return dump_table(table, name)
    if fmt == TableFormat.CSV:
        return _render_csv(table)
    return _render_grid(table, name, color)


def _render_csv(table: Union[HFKTable, PartialHFKTable]) -> str:
    hfk = table.table if isinstance(table, PartialHFKTable) else table
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["alexander", "maslov", "group"])
    for (i, m), group in sorted(hfk.items(), reverse=True):
        writer.writerow([i, m, str(group)])
    return buffer.getvalue()


def _render_grid(table: Union[HFKTable, PartialHFKTable], name: str, color: bool) -> str:
    """Rows are Alexander gradings (descending), columns Maslov gradings (descending)."""
    partial = table if isinstance(table, PartialHFKTable) else None
    hfk = partial.table if partial else table

    lines: List[str] = []
    if name:
        lines.append(f"{BOLD}{name}{RESET}" if color else name)
    if partial:
        lines.append(f"valid for {partial.describe_range()}")
        lines.extend(f"  {key}: {value}" for key, value in sorted(partial.assumptions.items()))
    elif hfk.metadata.get("status") == "conjectural":
        lines.append("conjectural: large-n hypothesis unverified")

    if hfk.is_empty():
        lines.append("0")
        return "\n".join(lines) + "\n"

    rows = hfk.alexander_gradings()
    maslovs = sorted({m for _, m in hfk}, reverse=True)
    columns = list(range(maslovs[0], maslovs[-1] - 1, -1))
    cells = {key: str(group) for key, group in hfk.items()}
    width = max([len(c) for c in cells.values()] + [len(str(m)) for m in columns] + [1])
    label_width = max(len(str(i)) for i in range(rows[-1], rows[0] + 1)) + 1

    header = "i\\M".rjust(label_width) + " | " + " ".join(str(m).rjust(width) for m in columns)
    lines.append(header)
    lines.append("-" * len(header))
    for i in range(rows[0], rows[-1] - 1, -1):
        row = []
        for m in columns:
            text = cells.get((i, m), ".").rjust(width)
            if color:
                text = f"{BOLD}{text}{RESET}" if (i, m) in cells else f"{DIM}{text}{RESET}"
            row.append(text)
        lines.append(str(i).rjust(label_width) + " | " + " ".join(row))
    return "\n".join(lines) + "\n"
