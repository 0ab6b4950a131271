import argparse
import json

from services.verify_service import verify_service
from utils.file_io import load_complex
from .common import add_cable_arguments, cable_params, emit


def register(subparsers):
    parser = subparsers.add_parser("verify", help="Run every cross-check on a complex and its cable")
    parser.add_argument("--input", required=True, help="Complex file (JSON)")
    add_cable_arguments(parser, required=False)
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    complex_ = load_complex(args.input)
    report = verify_service.run_verify(complex_, cable_params(args))
    if args.format == "json":
        document = dict(report.model_dump(mode="json"), exit_code=report.exit_code)
        emit(json.dumps(document, sort_keys=True, indent=2) + "\n")
    else:
        lines = [f"verify {report.name}"]
        lines.extend(f"  {check.status.value.upper():4} {check.name}" + (f": {check.detail}" if check.detail else "")
                     for check in report.checks)
        emit("\n".join(lines) + "\n")
    return report.exit_code
