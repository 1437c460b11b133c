"""CLI commands package."""

from .base import BaseCommand

__all__ = ["BaseCommand"]
