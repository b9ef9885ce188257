import functools
from collections.abc import Callable

import rich.box
import rich.console
import rich.panel
import rich.table
import typer

from uvlife.exception import (
    UvlStageError,
    UvlUserError,
    UvlUserValidationError,
    UvlValidationError,
)

USER_ERROR_EXIT_CODE = 2
STAGE_ERROR_EXIT_CODE = 3

error_console = rich.console.Console(stderr=True)


def error_panel(content: rich.console.RenderableType, title: str) -> rich.panel.Panel:
    return rich.panel.Panel(
        content,
        title=f"[bold red]{title}[/bold red]",
        title_align="left",
        border_style="bold red",
    )


def validation_error_table(errors: list[UvlValidationError]) -> rich.table.Table:
    """Table of location, offending input and explanation, one row per error."""
    table = rich.table.Table(expand=True, show_lines=True, box=rich.box.ROUNDED)
    table.add_column("Location", style="cyan", no_wrap=True)
    table.add_column("Input Value", style="magenta", no_wrap=True)
    table.add_column("Explanation", style="orange4")
    for error in errors:
        location = ".".join(error.location)
        if error.yaml_location is not None:
            (line, column), _ = error.yaml_location
            location = f"{location} (line {line}, column {column})"
        table.add_row(location, error.input, error.message)
    return table


def handle_user_errors[**P](function: Callable[P, None]) -> Callable[P, None]:
    """Decorator that turns expected failures into a panel and an exit code.

    Why:
        Missing inputs, invalid configuration and failed stages are part of
        normal use and deserve a readable message, not a traceback. Exit codes
        tell scripts which kind of failure happened: 2 for invalid input, 3 for
        a stage that failed during a run. Any other exception keeps its stack
        trace.

    Example:
        ```py
        @app.command()
        @handle_user_errors
        def my_command():
            # Any UvlUserError gets caught and displayed cleanly
            pass
        ```

    Args:
        function: CLI command function to wrap.

    Returns:
        Wrapped function with error handling.
    """

    @functools.wraps(function)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> None:
        try:
            return function(*args, **kwargs)
        except UvlUserValidationError as e:
            error_console.print(
                error_panel(
                    validation_error_table(e.validation_errors),
                    "There are errors in the input file!",
                )
            )
            raise typer.Exit(code=USER_ERROR_EXIT_CODE) from e
        except UvlUserError as e:
            error_console.print(error_panel(e.message or "Invalid input.", "Error"))
            raise typer.Exit(code=USER_ERROR_EXIT_CODE) from e
        except UvlStageError as e:
            error_console.print(error_panel(str(e), "Stage failed"))
            raise typer.Exit(code=STAGE_ERROR_EXIT_CODE) from e

    return wrapper
