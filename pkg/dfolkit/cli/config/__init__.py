"""Configuration files for the CLI."""

from .manager import ConfigManager

__all__ = ["ConfigManager"]
