"""Subcommands.  Each module exposes `register(subparsers)`; its handler returns the exit code."""

import sys
from pathlib import Path
from typing import Optional


def read_text(path: str) -> str:
    # latin-1 maps every byte, so stray bytes reach the parser and get a line number
    return Path(path).read_bytes().decode("latin-1")


def write_output(text: str, path: Optional[str] = None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")
