"""Weierstrass command handler"""

import argparse
from typing import Any, Tuple

from ..constants import EXIT_MATH_FAILURE, EXIT_OK
from ..fibration import scan_models, weierstrass_summary
from ..utils.serialization import load_json_file, parse_weierstrass
from .base import add_out_argument


class WeierstrassCommand:
    """
    `k3lat weierstrass check FILE [FILE ...]`

    One file prints {valid, delta_nonzero, nodal_count, j_degree}; several
    files print a list in argument order. Exit 0 iff every model is valid.
    """

    def __init__(self, cli):
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("weierstrass", help="Weierstrass model validation")
        actions = parser.add_subparsers(dest="action", required=True)

        check = actions.add_parser("check", help="Validate Weierstrass models from JSON files")
        check.add_argument("files", nargs="+", help='JSON files {"g2": [...], "g3": [...]}')
        check.add_argument("--threads", type=int, help="Worker threads (default K3LAT_THREADS)")
        add_out_argument(check)
        check.set_defaults(handler=self.check)

    def check(self, args: argparse.Namespace) -> Tuple[Any, int]:
        models = [parse_weierstrass(load_json_file(path)) for path in args.files]
        if len(models) == 1:
            summary = weierstrass_summary(models[0])
            return summary, EXIT_OK if summary["valid"] else EXIT_MATH_FAILURE
        summaries = scan_models(models, threads=args.threads)
        all_valid = all(s["valid"] for s in summaries)
        return summaries, EXIT_OK if all_valid else EXIT_MATH_FAILURE
