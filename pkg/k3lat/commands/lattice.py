"""Lattice command handler"""

import argparse
from typing import Any, Tuple

from ..constants import EXIT_OK
from ..lattice import (
    character_kernel,
    intersect,
    lattice_info,
    orthogonal_complement,
    saturation,
)
from ..models.lattice import Character
from ..utils.serialization import parse_vector
from .base import (
    add_lattice_arguments,
    add_out_argument,
    embedding_from_rows,
    lattice_from_args,
)


class LatticeCommand:
    """
    `k3lat lattice {info,complement,saturate,kernel,intersect}`

    Example:
        $ k3lat lattice complement --gram [[2,3],[3,0]] --span [[1,1]]
        [[3,-5]]
    """

    def __init__(self, cli):
        """
        Initialize lattice command handler

        Args:
            cli: K3LatCLI instance
        """
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("lattice", help="Lattice invariants and sublattices")
        actions = parser.add_subparsers(dest="action", required=True)

        info = actions.add_parser("info", help="Rank, signature, discriminant and group")
        add_lattice_arguments(info)
        add_out_argument(info)
        info.set_defaults(handler=self.info)

        complement = actions.add_parser("complement", help="Orthogonal complement of a span")
        add_lattice_arguments(complement)
        complement.add_argument("--span", required=True, help="Rows spanning the sublattice")
        add_out_argument(complement)
        complement.set_defaults(handler=self.complement)

        saturate = actions.add_parser("saturate", help="Primitive closure of a span")
        add_lattice_arguments(saturate)
        saturate.add_argument("--span", required=True, help="Rows spanning the sublattice")
        add_out_argument(saturate)
        saturate.set_defaults(handler=self.saturate)

        kernel = actions.add_parser("kernel", help="Kernel of a character T -> Z/n")
        add_lattice_arguments(kernel)
        kernel.add_argument("--values", required=True, help="Character values on the basis")
        kernel.add_argument("--modulus", required=True, type=int, help="Order n of Z/n")
        add_out_argument(kernel)
        kernel.set_defaults(handler=self.kernel)

        meet = actions.add_parser("intersect", help="Intersection of two spans")
        add_lattice_arguments(meet)
        meet.add_argument("--span1", required=True, help="Rows of the first sublattice")
        meet.add_argument("--span2", required=True, help="Rows of the second sublattice")
        add_out_argument(meet)
        meet.set_defaults(handler=self.intersect)

    def info(self, args: argparse.Namespace) -> Tuple[Any, int]:
        return lattice_info(lattice_from_args(args)), EXIT_OK

    def complement(self, args: argparse.Namespace) -> Tuple[Any, int]:
        lattice = lattice_from_args(args)
        result = orthogonal_complement(embedding_from_rows(lattice, args.span))
        return result.basis, EXIT_OK

    def saturate(self, args: argparse.Namespace) -> Tuple[Any, int]:
        lattice = lattice_from_args(args)
        closure, index = saturation(embedding_from_rows(lattice, args.span))
        return {"basis": closure.basis, "index": index}, EXIT_OK

    def kernel(self, args: argparse.Namespace) -> Tuple[Any, int]:
        lattice = lattice_from_args(args)
        values = tuple(parse_vector(args.values, "values"))
        character = Character(lattice, args.modulus, values)
        result = character_kernel(character)
        return {"basis": result.basis, "index": character.order}, EXIT_OK

    def intersect(self, args: argparse.Namespace) -> Tuple[Any, int]:
        lattice = lattice_from_args(args)
        result = intersect(
            embedding_from_rows(lattice, args.span1, "span1"),
            embedding_from_rows(lattice, args.span2, "span2"),
        )
        return result.basis, EXIT_OK
