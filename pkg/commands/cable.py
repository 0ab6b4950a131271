import argparse

from services.cabling_service import cabling_service
from utils.file_io import load_complex
from .common import add_cable_arguments, add_format_arguments, cable_params, emit_table


def register(subparsers):
    parser = subparsers.add_parser("cable", help="HFK of the (p, pn+1) cable of a knot complex")
    parser.add_argument("--input", required=True, help="Complex file (JSON)")
    add_cable_arguments(parser, required=True)
    add_format_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    complex_ = load_complex(args.input)
    params = cable_params(args)
    table = cabling_service.cable_table(complex_, params)
    emit_table(table, args, f"HFK({complex_.name}_{{{params.p},{params.p * params.n + 1}}})")
    return 0
