import argparse
import sys
from typing import Optional, Union

from models.cabling import CableParams, PartialHFKTable
from models.complex import HFKTable
from models.enums import TableFormat
from models.errors import UsageError
from utils.file_io import write_text
from utils.rendering import color_enabled, render_table


def add_format_arguments(parser: argparse.ArgumentParser, default: TableFormat = TableFormat.GRID):
    parser.add_argument("--format", choices=[f.value for f in TableFormat], default=default.value,
                        help="Output format for tables")
    parser.add_argument("--output", help="Write the result to this file instead of stdout")


def add_cable_arguments(parser: argparse.ArgumentParser, required: bool):
    parser.add_argument("--p", type=int, required=required, help="Cabling parameter p >= 2")
    parser.add_argument("--n", type=int, required=required, help="Cabling parameter n != 0")
    parser.add_argument("--c-prime", dest="c_prime", type=int, default=None,
                        help="Diagram constant c' (required for p > 2)")
    parser.add_argument("--assume-large-n", dest="assume_large_n", action="store_true",
                        help="Treat n as satisfying the large-n hypothesis")


def cable_params(args: argparse.Namespace) -> Optional[CableParams]:
    if args.p is None and args.n is None:
        return None
    if args.p is None or args.n is None:
        raise UsageError("--p and --n must be given together")
    return CableParams(p=args.p, n=args.n, c_prime=args.c_prime, large_n_override=args.assume_large_n)


def emit(text: str, output: Optional[str] = None):
    if output:
        write_text(output, text)
    else:
        sys.stdout.write(text)


def emit_table(table: Union[HFKTable, PartialHFKTable], args: argparse.Namespace, name: str = ""):
    fmt = TableFormat(args.format)
    color = args.output is None and color_enabled(sys.stdout)
    emit(render_table(table, fmt, name, color), args.output)
