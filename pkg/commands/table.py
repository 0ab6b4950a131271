import argparse
from pathlib import Path

from utils.file_io import load_table
from .common import add_format_arguments, emit_table


def register(subparsers):
    parser = subparsers.add_parser("table", help="Re-render an HFK table file")
    parser.add_argument("--input", required=True, help="HFK table file (JSON)")
    add_format_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    table = load_table(args.input)
    emit_table(table, args, Path(args.input).stem)
    return 0
