import argparse

from models.errors import UsageError
from services.torus_service import torus_service
from utils.file_io import dump_complex
from .common import add_format_arguments, emit, emit_table


def register(subparsers):
    parser = subparsers.add_parser("torus", help="Built-in torus knot tables and staircase complexes")
    parser.add_argument("--family", choices=["2", "37"], help="T(2,2n+1) or T(3,7)")
    parser.add_argument("--param", type=int, default=None, help="n for --family 2")
    parser.add_argument("--staircase", type=int, default=None,
                        help="Emit the staircase complex of T(2,2m+1) (m > 0) or its mirror (m < 0)")
    add_format_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    if args.staircase is not None:
        emit(dump_complex(torus_service.staircase_T2(args.staircase)), args.output)
        return 0
    if args.family == "37":
        emit_table(torus_service.hfk_torus_3_7(), args, "HFK(T(3,7))")
        return 0
    if args.family == "2":
        if args.param is None:
            raise UsageError("--family 2 needs --param")
        n = args.param
        emit_table(torus_service.hfk_torus_2(n), args, f"HFK(T(2,{2 * n + 1}))")
        return 0
    raise UsageError("give --family or --staircase")
