"""Shared argument helpers for command handlers"""

import argparse
from pathlib import Path
from typing import Any, Optional

from ..exceptions import K3LatValidationError
from ..models.lattice import Embedding, Lattice
from ..utils.serialization import load_json_file, parse_json, parse_lattice, parse_rows


def add_out_argument(parser: argparse.ArgumentParser) -> None:
    """Per-command --out; SUPPRESS keeps a global --out from being overwritten"""
    parser.add_argument(
        "--out", default=argparse.SUPPRESS, help="Write the JSON result to this file"
    )


def add_lattice_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--name", help='Standard lattice: "E8neg", "U", "K3" or "rank1:d"')
    group.add_argument("--gram", help="Gram matrix as JSON, e.g. [[2,3],[3,0]]")


def lattice_from_args(args: argparse.Namespace) -> Lattice:
    """Lattice from --name or --gram"""
    spec: Optional[Any] = args.name if args.name is not None else args.gram
    return parse_lattice(spec)


def embedding_from_rows(lattice: Lattice, rows: Any, what: str = "span") -> Embedding:
    if rows is None:
        raise K3LatValidationError(f"--{what} is required")
    return Embedding(lattice, parse_rows(rows, what))


def json_argument(value: str, what: str) -> Any:
    """Parse a JSON argument given inline or as a path to a JSON file"""
    if value.lstrip().startswith(("[", "{")):
        return parse_json(value, what)
    return load_json_file(Path(value))
