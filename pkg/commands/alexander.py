import argparse

from models.cabling import PartialHFKTable
from services.alexander_service import alexander_service
from utils.file_io import dump_polynomial, load_table
from .common import emit


def register(subparsers):
    parser = subparsers.add_parser("alexander", help="Alexander polynomial of a table or a torus knot")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="HFK table file (JSON)")
    source.add_argument("--torus", type=int, nargs=2, metavar=("P", "Q"), help="Torus knot T(P,Q)")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--output", help="Write the result to this file instead of stdout")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.torus:
        p, q = args.torus
        name = f"T({p},{q})"
        poly = alexander_service.torus_alexander(p, q)
    else:
        table = load_table(args.input)
        if isinstance(table, PartialHFKTable):
            table = table.table
        name = args.input
        poly = alexander_service.euler_poly(table)

    if args.format == "json":
        emit(dump_polynomial(poly, name), args.output)
    else:
        emit(f"{name}: {poly}\n{poly.terms()}\n", args.output)
    return 0
