"""Formatting utilities for CLI output."""

from typing import Any, Dict, List

from rich.table import Table
from rich.tree import Tree


def get_color(color_name: str) -> str:
    """Get color code for consistent styling."""
    colors = {
        "primary": "blue",
        "secondary": "cyan",
        "success": "green",
        "warning": "yellow",
        "error": "red",
        "info": "white",
        "muted": "grey70",
    }
    return colors.get(color_name, color_name)


def format_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value) if value else "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def details_table(title: str, details: Dict[str, Any]) -> Table:
    """Two-column table of the scalar and list entries of ``details``."""
    table = Table(title=title, show_header=False, title_style=f"bold {get_color('primary')}")
    table.add_column("key", style=get_color("secondary"))
    table.add_column("value", overflow="fold")
    for key, value in details.items():
        if isinstance(value, dict) or (
            isinstance(value, list) and value and isinstance(value[0], dict)
        ):
            continue
        table.add_row(key, format_value(value))
    return table


def derivation_tree(node: Dict[str, Any]) -> Tree:
    """A rich tree of a derivation or proof in its ``to_dict`` form."""
    label = f"[{get_color('secondary')}]{node['rule']}[/] {node['conclusion']}"
    if "height" in node:
        label += f" [{get_color('muted')}](h={node['height']})[/]"
    tree = Tree(label)
    stack: List[tuple] = [(tree, p) for p in reversed(node.get("premises", []))]
    while stack:
        parent, child = stack.pop()
        text = f"[{get_color('secondary')}]{child['rule']}[/] {child['conclusion']}"
        branch = parent.add(text)
        stack.extend((branch, p) for p in reversed(child.get("premises", [])))
    return tree


def laws_table(title: str, laws: List[Dict[str, Any]]) -> Table:
    table = Table(title=title, title_style=f"bold {get_color('primary')}")
    table.add_column("law", style=get_color("secondary"))
    table.add_column("checked", justify="right")
    table.add_column("failed", justify="right")
    table.add_column("first failure", overflow="fold")
    for law in laws:
        failures = law["failures"]
        status = get_color("error") if failures else get_color("success")
        table.add_row(
            law["law"],
            str(law["checked"]),
            f"[{status}]{len(failures)}[/]",
            failures[0] if failures else "",
        )
    return table
