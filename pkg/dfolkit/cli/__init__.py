"""Command-line interface for the dfolkit kernel."""

from .main import cli, main

__all__ = ["cli", "main"]
