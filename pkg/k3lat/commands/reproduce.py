"""Reproduce command handler"""

import argparse
from typing import Any, List, Optional, Tuple

from ..constants import CLAIM_GROUPS, EXIT_MATH_FAILURE, EXIT_OK
from ..reproduce import run_claims, summarize
from .base import add_out_argument


def _groups(raw: Optional[List[str]]) -> Optional[List[str]]:
    """--filter may repeat and each value may be comma-separated"""
    if not raw:
        return None
    return [g.strip() for value in raw for g in value.split(",") if g.strip()]


class ReproduceCommand:
    """
    `k3lat reproduce [--filter GROUP]`

    Runs the claim suite and exits 0 iff every selected claim passes.
    """

    def __init__(self, cli):
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("reproduce", help="Run the machine-checked claim suite")
        parser.add_argument(
            "--filter",
            action="append",
            metavar="GROUP",
            help=f"Only run claims in these groups ({', '.join(CLAIM_GROUPS)})",
        )
        add_out_argument(parser)
        parser.set_defaults(handler=self.run)

    def run(self, args: argparse.Namespace) -> Tuple[Any, int]:
        entries = run_claims(_groups(args.filter))
        summary = summarize(entries)
        payload = {"claims": entries, "summary": summary}
        return payload, EXIT_OK if summary["failed"] == 0 else EXIT_MATH_FAILURE
