"""Base command module with shared functionality."""

import logging
from typing import Any, Dict, Optional

import click

from dfolkit.cli.config.manager import ConfigManager
from dfolkit.cli.constants import EX_CHECK_FAILED, EX_CONFIG, EX_DATAERR, EX_OK
from dfolkit.cli.exceptions import CLIException
from dfolkit.cli.utils.display import show_report
from dfolkit.dfol.theory import Theory
from dfolkit.exceptions import KernelError, ParseError
from dfolkit.parsing.files import load_theory
from dfolkit.types import CommandReport

logger = logging.getLogger(__name__)


class BaseCommand:
    """Base class for CLI commands.

    Subclasses implement :meth:`execute`; :meth:`run` turns its report, or the
    kernel error it raised, into output and an exit code.
    """

    name = "command"

    def __init__(self, settings: Dict[str, Any]):
        self.settings = settings
        self.fuel = int(settings["fuel"])
        self.as_json = bool(settings["json"])

    @staticmethod
    def common_options(f):
        """Decorator to add common command options."""
        options = [
            click.option(
                "--fuel",
                type=click.IntRange(min=1),
                default=None,
                help="Reconstruction fuel per check (config key 'fuel', default 10000)",
            ),
            click.option(
                "--json/--no-json",
                "as_json",
                default=None,
                help="Emit a machine-readable JSON report",
            ),
        ]
        # Apply in reverse so --help lists them in declaration order
        for option in reversed(options):
            f = option(f)
        return f

    @staticmethod
    def resolve(ctx: click.Context, **overrides: Any) -> Dict[str, Any]:
        """Command-line values over config-file values over defaults."""
        # The group loaded the config file once; reuse its data
        manager = ConfigManager()
        obj = ctx.obj if isinstance(ctx.obj, dict) else {}
        manager.config_data = dict(obj.get("config_data") or {})
        # --json/--no-json is stored under the config key "json"
        if "as_json" in overrides:
            overrides["json"] = overrides.pop("as_json")
        return manager.settings(overrides)

    def theory(self, path: str) -> Theory:
        return load_theory(path, self.fuel)

    def execute(self) -> CommandReport:
        raise NotImplementedError

    def run(self) -> int:
        """Run the command.

        Returns:
            Exit code (0 for success, 1 for a kernel rejection, 2 for unreadable input)
        """
        try:
            report = self.execute()
            # A report that is not ok is a kernel rejection, not a crash
            exit_code = EX_OK if report.ok else EX_CHECK_FAILED
        # ParseError first: it is also a KernelError
        except ParseError as e:
            logger.error("%s: %s", self.name, e, exc_info=logger.isEnabledFor(logging.DEBUG))
            report = CommandReport(self.name, ok=False, error=e.to_dict())
            exit_code = EX_DATAERR
        except KernelError as e:
            logger.error(
                "%s rejected: %s", self.name, e, exc_info=logger.isEnabledFor(logging.DEBUG)
            )
            report = CommandReport(self.name, ok=False, error=e.to_dict())
            exit_code = EX_CHECK_FAILED
        # Errors are reported in the same shape as results
        show_report(report, self.as_json)
        return exit_code

    def finish(self) -> None:
        """Run and raise :class:`CLIException` on a non-zero exit code."""
        exit_code = self.run()
        if exit_code != EX_OK:
            raise CLIException(f"{self.name} failed with exit code {exit_code}", exit_code)


def choice(value: Optional[str], allowed: Dict[str, Any], key: str) -> Any:
    """Look up a config or option value, failing with the config exit code."""
    try:
        return allowed[str(value)]
    except KeyError:
        raise CLIException(
            f"{key} must be one of {', '.join(sorted(allowed))}, not {value}", EX_CONFIG
        ) from None
