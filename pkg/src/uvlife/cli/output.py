import contextlib
import pathlib

from rich import print


def print_outputs(message: str, paths: list[pathlib.Path]) -> None:
    """Print a one-line summary followed by the written paths."""
    shown = []
    for path in paths:
        with contextlib.suppress(ValueError):
            path = path.resolve().relative_to(pathlib.Path.cwd())
        shown.append(f"./{path}" if not path.is_absolute() else str(path))
    print(f"[green]✓[/green] {message}: [purple]{'; '.join(shown)}[/purple]")
