"""Core CLI module for dfolkit."""

from __future__ import annotations

import importlib
import logging
import sys
from typing import Dict, List, Optional

import click

from dfolkit.cli.constants import EX_CONFIG, EX_GENERAL, EX_INTERRUPTED, EX_OK
from dfolkit.cli.exceptions import CLIException
from dfolkit.cli.utils.display import print_error, print_warning

logger = logging.getLogger(__name__)


def _get_version() -> str:
    """Return package version from metadata, or fallback for dev installs."""
    try:
        from importlib.metadata import version

        return version("dfolkit")
    except Exception:
        return "0.3.0"


def configure_logging(verbose: int, debug: bool, trace: bool) -> None:
    """Configure logging based on verbosity flags.

    Args:
        verbose: Verbosity level (0-3)
        debug: Enable debug logging
        trace: Enable trace logging (most verbose, includes the grammar library)
    """
    # Determine log level
    if trace:
        log_level = logging.DEBUG  # Most verbose, with file and line
        format_str = (
            "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
        )
    elif debug or verbose >= 2:
        log_level = logging.DEBUG
        format_str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    elif verbose == 1:
        log_level = logging.INFO
        format_str = "%(levelname)s - %(message)s"
    else:
        log_level = logging.WARNING
        format_str = "%(levelname)s - %(message)s"

    # Configure root logger
    logging.basicConfig(
        level=log_level, format=format_str, datefmt="%Y-%m-%d %H:%M:%S", force=True
    )

    # Set specific logger levels for verbose output
    if trace or debug or verbose >= 2:
        logging.getLogger("dfolkit").setLevel(logging.DEBUG)
    # Parser library records only under --trace
    logging.getLogger("lark").setLevel(logging.DEBUG if trace else logging.WARNING)


class LazyGroup(click.Group):
    """Imports a command's module only when the command is looked up."""

    def __init__(self, *args, lazy_commands: Optional[Dict[str, str]] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.lazy_commands = lazy_commands or {}

    def list_commands(self, ctx: click.Context) -> List[str]:
        return sorted(set(super().list_commands(ctx)) | set(self.lazy_commands))

    def get_command(self, ctx: click.Context, cmd_name: str) -> Optional[click.Command]:
        if cmd_name not in self.lazy_commands:
            return super().get_command(ctx, cmd_name)
        # "module:attribute"
        module_name, attr = self.lazy_commands[cmd_name].split(":")
        return getattr(importlib.import_module(module_name), attr)


# Lazy imports: a command module is imported only when its command runs
COMMANDS = {
    "check-sig": "dfolkit.cli.commands.signature:check_sig",
    "folds2sig": "dfolkit.cli.commands.signature:folds2sig",
    "sig2folds": "dfolkit.cli.commands.signature:sig2folds",
    "check": "dfolkit.cli.commands.judgement:check",
    "infer": "dfolkit.cli.commands.judgement:infer",
    "standardize": "dfolkit.cli.commands.judgement:standardize_cmd",
    "transform": "dfolkit.cli.commands.judgement:transform",
    "check-proof": "dfolkit.cli.commands.proof:check_proof_cmd",
    "eval": "dfolkit.cli.commands.model:eval_cmd",
    "laws": "dfolkit.cli.commands.laws:laws",
}


@click.group(cls=LazyGroup, lazy_commands=COMMANDS, invoke_without_command=True)
@click.version_option(version=_get_version(), prog_name="dfolkit")
@click.option(
    "--config-file",
    type=click.Path(exists=True, dir_okay=False),
    help="TOML, YAML or JSON file with fuel, mode, law_size, max_height and json settings",
)
@click.option(
    "--verbose",
    "-v",
    count=True,
    help="Increase verbosity. Use -v for INFO, -vv for DEBUG",
)
@click.option("--debug", is_flag=True, help="Enable debug logging (equivalent to -vv)")
@click.option(
    "--trace",
    is_flag=True,
    help="Enable trace logging (most verbose, includes parser library logs)",
)
@click.pass_context
def cli(
    ctx: click.Context, config_file: Optional[str], verbose: int, debug: bool, trace: bool
) -> None:
    """dfolkit - proof checking for first-order logic with dependent sorts.

    Run 'dfolkit COMMAND --help' for the options of one command.
    """
    # Configure logging first
    configure_logging(verbose, debug, trace)

    # Store flags in context for subcommands
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["debug"] = debug
    ctx.obj["trace"] = trace
    ctx.obj["exit_code"] = EX_OK

    # Load config file if provided; commands merge it with their options
    if config_file:
        from dfolkit.cli.config.manager import ConfigManager

        config_data = ConfigManager(config_file).load_config()
        if config_data is None:
            ctx.obj["exit_code"] = EX_CONFIG
            raise CLIException(f"cannot use config file {config_file}", EX_CONFIG)
        ctx.obj["config_data"] = config_data

    # Show help when no command is given
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI.

    Returns:
        Exit code: 0 on success, 1 when the kernel rejects the input, 2 for
        unreadable input, bad usage or a bad config file, 130 on interrupt
    """
    try:
        # standalone_mode=False hands exit codes and errors back to us
        result = cli.main(args=argv, prog_name="dfolkit", standalone_mode=False)
        return result if isinstance(result, int) else EX_OK
    except CLIException as e:
        # Kernel, parse and config failures carry their own exit code
        logger.debug(e.message, exc_info=True)
        e.show()
        return e.exit_code
    except click.ClickException as e:
        # Usage errors from click itself
        e.show()
        return e.exit_code
    except click.Abort:
        print_warning("Aborted by user")
        return EX_INTERRUPTED
    except KeyboardInterrupt:
        print_warning("Aborted by user")
        return EX_INTERRUPTED
    except Exception as e:
        # Anything else is a bug; log the traceback
        logger.error(f"Unexpected error: {str(e)}", exc_info=True)
        print_error(f"Unexpected error: {str(e)}")
        return EX_GENERAL


if __name__ == "__main__":
    sys.exit(main())
