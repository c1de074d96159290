"""Mukai command handler"""

import argparse
from typing import Any, Dict, Tuple

from ..constants import EXIT_OK
from ..models.mukai import NSContext
from ..mukai import (
    fineness_index,
    from_chern,
    mukai_pairing,
    obstruction_residue,
    p1_splitting_types,
    schubert_pairing,
)
from ..utils.serialization import parse_lattice, parse_mukai_vector, parse_vector
from .base import add_out_argument


def _context(args: argparse.Namespace) -> NSContext:
    return NSContext(parse_lattice(args.ns))


def _add_ns_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--ns", required=True, help="NS lattice: Gram JSON such as [[8]] or a standard name"
    )


class MukaiCommand:
    """
    `k3lat mukai {pairing,chern,fineness,splitting,schubert}`

    Example:
        $ k3lat mukai fineness --v 2,[1],2 --ns [[8]]
        {"n":2}
    """

    def __init__(self, cli):
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("mukai", help="Mukai vectors and moduli fineness")
        actions = parser.add_subparsers(dest="action", required=True)

        pairing = actions.add_parser("pairing", help="Mukai pairing <v, w>")
        pairing.add_argument("--v", required=True, help="Mukai vector r,[c1...],s")
        pairing.add_argument("--w", required=True, help="Mukai vector r,[c1...],s")
        _add_ns_argument(pairing)
        add_out_argument(pairing)
        pairing.set_defaults(handler=self.pairing)

        chern = actions.add_parser("chern", help="Mukai vector from rank, c1 and c2")
        chern.add_argument("--rank", required=True, type=int)
        chern.add_argument("--c1", required=True, help="c1 coordinates in the NS basis")
        chern.add_argument("--c2", required=True, type=int)
        _add_ns_argument(chern)
        add_out_argument(chern)
        chern.set_defaults(handler=self.chern)

        fineness = actions.add_parser("fineness", help="Fineness index of the moduli space")
        fineness.add_argument("--v", required=True, help="Mukai vector r,[c1...],s")
        fineness.add_argument("--u", help="Optional obstruction representative u")
        _add_ns_argument(fineness)
        add_out_argument(fineness)
        fineness.set_defaults(handler=self.fineness)

        splitting = actions.add_parser("splitting", help="Splitting types on P^1 with given h^0")
        splitting.add_argument("--rank", required=True, type=int)
        splitting.add_argument("--degree", required=True, type=int)
        splitting.add_argument("--h0", required=True, type=int)
        add_out_argument(splitting)
        splitting.set_defaults(handler=self.splitting)

        schubert = actions.add_parser("schubert", help="Middle Schubert pairing on Gr(2,4)")
        schubert.add_argument("--lam", required=True, help="Partition, e.g. 2 or 1,1")
        schubert.add_argument("--mu", required=True, help="Partition, e.g. 2 or 1,1")
        add_out_argument(schubert)
        schubert.set_defaults(handler=self.schubert)

    def pairing(self, args: argparse.Namespace) -> Tuple[Any, int]:
        ctx = _context(args)
        v, w = parse_mukai_vector(args.v), parse_mukai_vector(args.w)
        return {"pairing": mukai_pairing(v, w, ctx)}, EXIT_OK

    def chern(self, args: argparse.Namespace) -> Tuple[Any, int]:
        c1 = tuple(parse_vector(args.c1, "c1"))
        return from_chern(args.rank, c1, args.c2, _context(args)), EXIT_OK

    def fineness(self, args: argparse.Namespace) -> Tuple[Any, int]:
        ctx = _context(args)
        v = parse_mukai_vector(args.v)
        payload: Dict[str, Any] = {"n": fineness_index(v, ctx)}
        if args.u is not None:
            payload["residue"] = obstruction_residue(parse_mukai_vector(args.u), v, ctx)
        return payload, EXIT_OK

    def splitting(self, args: argparse.Namespace) -> Tuple[Any, int]:
        types = p1_splitting_types(args.rank, args.degree, args.h0)
        return [list(t) for t in types], EXIT_OK

    def schubert(self, args: argparse.Namespace) -> Tuple[Any, int]:
        lam = tuple(parse_vector(args.lam, "lam"))
        mu = tuple(parse_vector(args.mu, "mu"))
        return {"pairing": schubert_pairing(lam, mu)}, EXIT_OK
