import argparse

from models.errors import InvalidComplex
from services.complex_service import complex_service
from utils.file_io import load_complex
from .common import emit


def register(subparsers):
    parser = subparsers.add_parser("homology", help="Homology of a filtration level of a complex")
    parser.add_argument("--input", required=True, help="Complex file (JSON)")
    parser.add_argument("--level", type=int, default=None,
                        help="Filtration level j; omit for the whole complex")
    parser.add_argument("--quotient", action="store_true",
                        help="Use the quotient complex C/Filt(C, j) instead of Filt(C, j)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    complex_ = load_complex(args.input)
    report = complex_service.validate(complex_)
    # homology of any chain complex is fine; only the knot condition may fail
    if any(not check.passed for check in report.checks if check.name != complex_service.CHECK_KNOT):
        raise InvalidComplex(report)
    if args.level is None:
        title = f"H({complex_.name})"
        homology = complex_service.total_homology(complex_)
    elif args.quotient:
        title = f"H({complex_.name}/Filt({complex_.name},{args.level}))"
        homology = complex_service.quotient_homology(complex_, args.level)
    else:
        title = f"H(Filt({complex_.name},{args.level}))"
        homology = complex_service.filtration_homology(complex_, args.level)

    lines = [title]
    if homology.is_zero():
        lines.append("  0")
    lines.extend(f"  M={m}: {group}" for m, group in sorted(homology.items(), reverse=True))
    emit("\n".join(lines) + "\n")
    return 0
