import argparse
import sys
from typing import List, Optional

from projwidth import __version__
from projwidth.cli import analyze, gen, minimize, oracle, verify
from projwidth.core.errors import (
    CapExceeded,
    EmbeddingError,
    FormatError,
    InvalidParameterError,
    InvariantError,
    NotApplicableError,
)
from projwidth.core.logging import get_logger

logger = get_logger(__name__)

INPUT_ERRORS = (FormatError, EmbeddingError, NotApplicableError, InvalidParameterError, OSError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projwidth",
        description="Widths and odd cycle transversals of projective-plane quadrangulations",
    )
    parser.add_argument("--version", action="version", version=f"projwidth {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (gen, analyze, verify, minimize, oracle):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.info(f"Command: {args.command}")
    try:
        code = args.handler(args)
    except InvariantError as exc:
        logger.error(f"invariant failed: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    logger.info(f"Exit code: {code}")
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
