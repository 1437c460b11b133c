"""Exceptions that carry a process exit code out of a command."""

from typing import IO, Optional

import click

from dfolkit.cli.constants import EX_GENERAL


class CLIException(click.ClickException):
    """A command finished with a non-zero exit code."""

    def __init__(self, message: str, exit_code: int = EX_GENERAL):
        super().__init__(message)
        self.exit_code = exit_code
        self.message = message

    def show(self, file: Optional[IO] = None) -> None:
        from dfolkit.cli.utils.display import print_error

        print_error(self.message)
