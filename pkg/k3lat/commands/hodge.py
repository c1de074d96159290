"""Hodge command handler"""

import argparse
from typing import Any, Dict, Tuple

from ..constants import EXIT_MATH_FAILURE, EXIT_OK
from ..exact import rat_matrix
from ..exceptions import K3LatValidationError
from ..hodge import is_isometry, is_period_point, rank1_extension_coefficient, transport_period
from ..models.hodge import PeriodPoint
from ..utils.serialization import parse_isometry, parse_lattice, parse_vector
from .base import add_lattice_arguments, add_out_argument, json_argument, lattice_from_args


class HodgeCommand:
    """
    `k3lat hodge {coefficient,check,period}`

    Example:
        $ k3lat hodge coefficient --e-norm -2 --r-norm -72
        {"coefficient":"1/12"}
    """

    def __init__(self, cli):
        self.cli = cli

    def register(self, subparsers: Any) -> None:
        parser = subparsers.add_parser("hodge", help="Rational Hodge isometries")
        actions = parser.add_subparsers(dest="action", required=True)

        coefficient = actions.add_parser(
            "coefficient", help="Coefficient of a rank-1 isometry extension"
        )
        coefficient.add_argument("--e-norm", required=True, type=int, help="<e, e>")
        coefficient.add_argument("--r-norm", required=True, type=int, help="<r, r>")
        add_out_argument(coefficient)
        coefficient.set_defaults(handler=self.coefficient)

        check = actions.add_parser("check", help="Check that a rational matrix is an isometry")
        check.add_argument(
            "--isometry",
            required=True,
            help='{"source": ..., "target": ..., "matrix": [[...]]} inline or as a file',
        )
        add_out_argument(check)
        check.set_defaults(handler=self.check)

        period = actions.add_parser("period", help="Check or transport a period point")
        add_lattice_arguments(period)
        period.add_argument("--re", required=True, help="Real part x")
        period.add_argument("--im", required=True, help="Imaginary part y")
        period.add_argument("--isometry", help="Isometry to transport the period along")
        add_out_argument(period)
        period.set_defaults(handler=self.period)

    def coefficient(self, args: argparse.Namespace) -> Tuple[Any, int]:
        return {"coefficient": rank1_extension_coefficient(args.e_norm, args.r_norm)}, EXIT_OK

    def check(self, args: argparse.Namespace) -> Tuple[Any, int]:
        """Exit 0 for an isometry, 1 otherwise"""
        data = json_argument(args.isometry, "isometry")
        if not isinstance(data, dict):
            raise K3LatValidationError("Isometry must be a JSON object")
        try:
            source = parse_lattice(data["source"])
            target = parse_lattice(data["target"])
            matrix = rat_matrix(data["matrix"], source.rank)
        except KeyError as e:
            raise K3LatValidationError(f"Isometry is missing {e}")
        result = is_isometry(matrix, source, target)
        return {"is_isometry": result}, EXIT_OK if result else EXIT_MATH_FAILURE

    def period(self, args: argparse.Namespace) -> Tuple[Any, int]:
        point = PeriodPoint(
            lattice_from_args(args),
            tuple(parse_vector(args.re, "re")),
            tuple(parse_vector(args.im, "im")),
        )
        payload: Dict[str, Any] = {"valid": is_period_point(point)}
        if args.isometry is not None:
            iso = parse_isometry(json_argument(args.isometry, "isometry"))
            image = transport_period(iso, point)
            payload["transported"] = {"re": list(image.re), "im": list(image.im)}
        return payload, EXIT_OK
