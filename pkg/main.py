# File: main.py
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config import settings
from commands import COMMANDS
from models.errors import HFKError, ParseError, UsageError
from utils.logging import setup_json_logging, setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Knot Floer homology of cable knots from filtered knot complexes",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    log_level = "DEBUG" if args.verbose else settings.LOG_LEVEL
    if settings.LOG_JSON and settings.LOG_FILE:
        setup_logging(log_level=log_level)
        setup_json_logging(settings.LOG_FILE, log_level=log_level)
    else:
        setup_logging(log_level=log_level, log_file=settings.LOG_FILE)

    try:
        return args.handler(args)
    except (ParseError, UsageError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        message = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        logger.error(message)
        print(f"error: {message}", file=sys.stderr)
        return 2
    except HFKError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
