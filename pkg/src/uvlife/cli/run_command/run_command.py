import pathlib
from typing import Annotated

import typer

from uvlife.pipeline import run_pipeline
from uvlife.schema.run_config_builder import build_run_config

from ..app import app
from ..error_handler import handle_user_errors
from ..parse_override_arguments import parse_override_arguments
from .progress_panel import ProgressPanel


@app.command(
    name="run",
    help=(
        "Run every stage from yearly extents to reports. Example: [yellow]uvl run"
        " config.yaml[/yellow]. Details: [cyan]uvl run --help[/cyan]"
    ),
    # allow extra arguments for overriding values of the configuration file:
    context_settings={"allow_extra_args": True, "ignore_unknown_options": True},
)
@handle_user_errors
def cli_command_run(
    config_file: Annotated[
        pathlib.Path, typer.Argument(help="The YAML run configuration.")
    ],
    jobs: Annotated[
        int | None,
        typer.Option("--jobs", "-j", min=1, help="Cap on worker threads per stage."),
    ] = None,
    quiet: Annotated[
        bool,
        typer.Option("--no-progress", help="Do not show the progress panel."),
    ] = False,
    # This is a dummy argument for the help message of the override arguments:
    _: Annotated[
        str | None,
        typer.Option(
            "--YAMLLOCATION",
            help="Overrides the value of YAMLLOCATION. For example,"
            " [cyan bold]--parameters.delta 0.4[/cyan bold].",
        ),
    ] = None,
    extra_override_arguments: typer.Context = None,  # ty: ignore[invalid-parameter-default]
):
    overrides = parse_override_arguments(extra_override_arguments)
    if jobs is not None:
        overrides["parameters.jobs"] = str(jobs)
    _, config = build_run_config(config_file, overrides)

    with ProgressPanel(quiet=quiet) as progress_panel:
        run_pipeline(config, config_file, on_stage=progress_panel.update_progress)
        progress_panel.finish_progress(config.output_dir)
