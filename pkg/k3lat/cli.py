"""
Command-line interface for k3lat
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, TextIO

from . import __version__
from .commands import (
    FamiliesCommand,
    HodgeCommand,
    LatticeCommand,
    MukaiCommand,
    ReproduceCommand,
    WeierstrassCommand,
)
from .config import Config
from .constants import EXIT_MATH_FAILURE, EXIT_USAGE_ERROR
from .exceptions import K3LatError, K3LatPreconditionError, K3LatValidationError
from .utils.serialization import canonical_json

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised by the argument parser instead of printing to sys.stderr and exiting"""

    def __init__(self, usage: str, prog: str, message: str):
        self.usage = usage
        self.prog = prog
        self.message = message
        super().__init__(message)

    def __str__(self):
        return f"{self.usage}{self.prog}: error: {self.message}"


class _ArgumentParser(argparse.ArgumentParser):
    # Subparsers inherit this class through add_subparsers
    def error(self, message: str):
        raise UsageError(self.format_usage(), self.prog, message)


class K3LatCLI:
    """
    k3lat command-line application

    Builds the argument parser from the command handlers, runs the selected
    handler and maps library errors to exit codes: 0 success, 1 mathematical
    failure, 2 usage error. stdout only ever carries JSON.

    Example:
        $ k3lat lattice info --name K3
        {"disc":-1,"disc_group":[],"even":true,"rank":22,"signature":[3,19]}
    """

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout
        self.stderr = stderr

        # Initialize command handlers
        self.lattice = LatticeCommand(self)
        self.hodge = HodgeCommand(self)
        self.mukai = MukaiCommand(self)
        self.weierstrass = WeierstrassCommand(self)
        self.families = FamiliesCommand(self)
        self.reproduce = ReproduceCommand(self)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _ArgumentParser(
            prog="k3lat", description="Exact lattice computations for K3 surfaces"
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        parser.add_argument("--out", help="Write the JSON result to this file instead of stdout")
        subparsers = parser.add_subparsers(dest="command", required=True)
        for handler in (
            self.lattice,
            self.hodge,
            self.mukai,
            self.weierstrass,
            self.families,
            self.reproduce,
        ):
            handler.register(subparsers)
        return parser

    def emit(self, payload: Any, out: Optional[str] = None) -> None:
        """Write canonical JSON plus a newline to --out or stdout"""
        text = canonical_json(payload) + "\n"
        if out:
            try:
                Path(out).write_text(text, encoding="utf-8")
            except OSError as e:
                raise K3LatValidationError(f"Cannot write {out}: {e}")
            return
        (self.stdout or sys.stdout).write(text)

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Parse arguments, dispatch and return the exit code

        Args:
            argv: Argument list (default sys.argv[1:])

        Returns:
            Process exit code
        """
        parser = self.build_parser()
        err = self.stderr or sys.stderr
        try:
            args = parser.parse_args(argv)
        except UsageError as e:
            err.write(f"{e}\n")
            return EXIT_USAGE_ERROR
        except SystemExit as e:
            # --help and --version
            return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

        try:
            payload, code = args.handler(args)
            self.emit(payload, getattr(args, "out", None))
        except K3LatValidationError as e:
            err.write(f"{e}\n")
            return EXIT_USAGE_ERROR
        except K3LatPreconditionError as e:
            err.write(f"{e}\n")
            return EXIT_MATH_FAILURE
        except K3LatError as e:
            err.write(f"{e}\n")
            return EXIT_MATH_FAILURE
        logger.debug("Command finished", extra={"command": args.command, "exit_code": code})
        return code


def main(argv: Optional[List[str]] = None) -> int:
    """Console entry point"""
    logging.basicConfig(
        level=Config.get_log_level(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return K3LatCLI().run(argv)


if __name__ == "__main__":
    sys.exit(main())
