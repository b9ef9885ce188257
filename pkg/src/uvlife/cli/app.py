import importlib
import logging
import pathlib
from typing import Annotated

import rich.console
import rich.logging
import typer
from rich import print

from uvlife import __version__

app = typer.Typer(
    rich_markup_mode="rich",
    # to make `uvl --version` work:
    invoke_without_command=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)


def configure_logging(verbose: bool, quiet: bool) -> None:
    """Send library logs to standard error through a `RichHandler`.

    Args:
        verbose: Show DEBUG messages.
        quiet: Show warnings and errors only. Wins over `verbose`.
    """
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    if quiet:
        level = logging.WARNING
    handler = rich.logging.RichHandler(
        console=rich.console.Console(stderr=True),
        show_path=False,
        rich_tracebacks=False,
    )
    logger = logging.getLogger("uvlife")
    logger.handlers = [handler]
    logger.setLevel(level)
    logger.propagate = False


@app.callback()
def cli_command_no_args(
    ctx: typer.Context,
    version_requested: Annotated[
        bool | None, typer.Option("--version", "-v", help="Show the version")
    ] = None,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-V", help="Log debug messages.")
    ] = False,
    quiet: Annotated[
        bool, typer.Option("--quiet", "-q", help="Log warnings and errors only.")
    ] = False,
):
    """uvl turns yearly urban-village masks into lifecycle analytics: remained,
    demolished and redeveloped land, transition matrices and reports.
    """
    configure_logging(verbose, quiet)

    if version_requested:
        print(f"uvlife v{__version__}")
    elif ctx.invoked_subcommand is None:
        print(ctx.get_help())
        raise typer.Exit()


# Auto import all commands so that they are registered with the app:
cli_folder_path = pathlib.Path(__file__).parent
for file in sorted(cli_folder_path.rglob("*_command.py")):
    # Enforce folder structure: ./name_command/name_command.py
    folder_name = file.parent.name
    py_file_name = file.stem

    full_module = f"{__package__}.{folder_name}.{py_file_name}"

    module = importlib.import_module(full_module)
