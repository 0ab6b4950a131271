import argparse

from models.errors import InvalidComplex
from services.complex_service import complex_service
from utils.file_io import load_complex
from .common import add_format_arguments, emit_table


def register(subparsers):
    parser = subparsers.add_parser("hfk", help="Knot Floer homology (associated graded) of a complex")
    parser.add_argument("--input", required=True, help="Complex file (JSON)")
    add_format_arguments(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    complex_ = load_complex(args.input)
    report = complex_service.validate(complex_)
    if not report.passed:
        raise InvalidComplex(report)
    table = complex_service.associated_graded(complex_)
    emit_table(table, args, f"HFK({complex_.name})")
    return 0
