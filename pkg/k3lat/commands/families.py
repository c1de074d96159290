"""Families command handler"""

import argparse
import csv
import logging
from pathlib import Path
from typing import Any, Sequence, Tuple

from ..config import Config
from ..constants import EXIT_MATH_FAILURE, EXIT_OK, SERIES_NAMES, SERIES_X3K
from ..exceptions import K3LatValidationError
from ..families import (
    builtin,
    catalog,
    correspondence_lambda,
    enumerate_pairs,
    obstruction_residues,
    reproduce_index_embeddings,
    series_degree,
    solve_partner,
    x3k_x3m2_obstruction,
)
from ..models.family import CorrespondencePair, SeriesId
from .base import add_out_argument

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["k", "l", "lambda"]


def write_pairs_csv(pairs: Sequence[CorrespondencePair], path: str) -> None:
    """CSV export with the same columns as the JSON output"""
    try:
        with Path(path).open("w", newline="", encoding="utf-8") as handle:
            writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for pair in pairs:
                writer.writerow(pair.to_dict())
    except OSError as e:
        raise K3LatValidationError(f"Cannot write {path}: {e}")
    logger.info("Wrote CSV export", extra={"path": str(path), "rows": len(pairs)})


class FamiliesCommand:
    """
    `k3lat families {catalog,solve,partner,obstruction,embeddings}`

    Example:
        $ k3lat families solve --s1 X3k --s2 X3k2
        []
    """

    def __init__(self, cli):
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("families", help="Family catalog and correspondences")
        actions = parser.add_subparsers(dest="action", required=True)

        listing = actions.add_parser("catalog", help="Built-in K3 families")
        listing.add_argument("--name", help="Show only this family")
        add_out_argument(listing)
        listing.set_defaults(handler=self.catalog)

        solve = actions.add_parser("solve", help="Parameter pairs with a square degree product")
        solve.add_argument("--s1", required=True, choices=SERIES_NAMES)
        solve.add_argument("--s2", required=True, choices=SERIES_NAMES)
        solve.add_argument("--k-max", type=int, help="Bound on k (default K3LAT_K_MAX)")
        solve.add_argument("--l-max", type=int, help="Bound on l (default K3LAT_L_MAX)")
        solve.add_argument("--csv", help="Also write the pairs to this CSV file")
        solve.add_argument("--threads", type=int, help="Worker threads (default K3LAT_THREADS)")
        add_out_argument(solve)
        solve.set_defaults(handler=self.solve)

        partner = actions.add_parser("partner", help="Partner l = 3 rho d^2 in the X3k1 series")
        partner.add_argument("--k", required=True, type=int)
        partner.add_argument("--d", type=int, default=1)
        partner.add_argument("--series", default=SERIES_X3K, choices=SERIES_NAMES)
        add_out_argument(partner)
        partner.set_defaults(handler=self.partner)

        obstruction = actions.add_parser(
            "obstruction", help="Mod-3 obstruction for X3k x X3k2"
        )
        obstruction.add_argument("--k", required=True, type=int)
        obstruction.add_argument("--m", required=True, type=int)
        add_out_argument(obstruction)
        obstruction.set_defaults(handler=self.obstruction)

        embeddings = actions.add_parser("embeddings", help="Index-2 and index-9 embedding chains")
        add_out_argument(embeddings)
        embeddings.set_defaults(handler=self.embeddings)

    def catalog(self, args: argparse.Namespace) -> Tuple[Any, int]:
        if args.name is not None:
            return builtin(args.name), EXIT_OK
        return catalog(), EXIT_OK

    def solve(self, args: argparse.Namespace) -> Tuple[Any, int]:
        k_max = args.k_max if args.k_max is not None else Config.get_k_max()
        l_max = args.l_max if args.l_max is not None else Config.get_l_max()
        pairs = enumerate_pairs(args.s1, args.s2, k_max, l_max, threads=args.threads)
        if args.csv:
            write_pairs_csv(pairs, args.csv)
        return pairs, EXIT_OK

    def partner(self, args: argparse.Namespace) -> Tuple[Any, int]:
        l = solve_partner(args.k, args.d, series=args.series)  # noqa: E741
        own = series_degree(SeriesId(args.series, args.k))
        payload = {
            "series": args.series,
            "k": args.k,
            "d": args.d,
            "l": l,
            "lambda": correspondence_lambda(own, 6 * l),
        }
        return payload, EXIT_OK

    def obstruction(self, args: argparse.Namespace) -> Tuple[Any, int]:
        payload = {"k": args.k, "m": args.m, "obstructed": x3k_x3m2_obstruction(args.k, args.m)}
        payload.update(obstruction_residues(args.k, args.m))
        return payload, EXIT_OK

    def embeddings(self, args: argparse.Namespace) -> Tuple[Any, int]:
        reports = reproduce_index_embeddings()
        failed = [r.chain for r in reports if not r.passed]
        if failed:
            logger.warning("Index chains failed", extra={"chains": failed})
        return reports, EXIT_MATH_FAILURE if failed else EXIT_OK
