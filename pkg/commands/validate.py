import argparse

from services.complex_service import complex_service
from utils.file_io import load_complex
from .common import emit


def register(subparsers):
    parser = subparsers.add_parser("validate", help="Check the invariants of a complex file")
    parser.add_argument("--input", required=True, help="Complex file (JSON)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    complex_ = load_complex(args.input)
    report = complex_service.validate(complex_)
    lines = [f"{complex_.name or args.input}: {'valid' if report.passed else 'invalid'}"]
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        detail = check.detail or ", ".join(check.offenders)
        lines.append(f"  {status} {check.name}" + (f" ({detail})" if detail else ""))
    emit("\n".join(lines) + "\n")
    return 0 if report.passed else 1
