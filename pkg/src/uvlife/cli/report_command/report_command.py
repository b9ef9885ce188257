import pathlib
import tempfile
from typing import Annotated

import typer

from uvlife.pipeline.manifest import StageRecord
from uvlife.pipeline.run import PipelineRun
from uvlife.schema.run_config_builder import build_run_config

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="report",
    help=(
        "Recompute the analytics tables and the Markdown and HTML report of a"
        " finished run. Example: [yellow]uvl report config.yaml[/yellow]"
    ),
)
@handle_user_errors
def cli_command_report(
    config_file: Annotated[
        pathlib.Path, typer.Argument(help="The run configuration used for the run.")
    ],
    out_dir: Annotated[
        pathlib.Path | None,
        typer.Option(
            "--out", "-o", help="Defaults to the run's `analytics/` directory."
        ),
    ] = None,
):
    _, config = build_run_config(config_file)
    target_dir = out_dir or config.output_dir / "analytics"
    with tempfile.TemporaryDirectory() as scratch:
        run = PipelineRun.from_outputs(config, config.output_dir, pathlib.Path(scratch))
        record = StageRecord("analytics")
        run.analytics(record)
        paths = []
        for relative in record.outputs:
            target = target_dir / pathlib.Path(relative).name
            target.parent.mkdir(parents=True, exist_ok=True)
            (pathlib.Path(scratch) / relative).replace(target)
            paths.append(target)
    print_outputs("Report written", [p for p in paths if p.suffix in (".md", ".html")])
