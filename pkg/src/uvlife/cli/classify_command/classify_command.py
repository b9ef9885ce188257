import pathlib
import tempfile
from typing import Annotated

import typer

from uvlife.lifecycle.io import read_parcels
from uvlife.pipeline.manifest import StageRecord
from uvlife.pipeline.run import PipelineRun
from uvlife.schema.run_config_builder import build_run_config

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs
from ..parse_override_arguments import parse_override_arguments


@app.command(
    name="classify",
    help=(
        "Assign land-use categories to demolished parcel-years with the evidence"
        " named in a run configuration. Example: [yellow]uvl classify config.yaml"
        " lifecycle/parcels_boundary.geojson --out landuse/[/yellow]"
    ),
    context_settings={"allow_extra_args": True, "ignore_unknown_options": True},
)
@handle_user_errors
def cli_command_classify(
    config_file: Annotated[
        pathlib.Path, typer.Argument(help="The YAML run configuration.")
    ],
    parcels: Annotated[
        pathlib.Path, typer.Argument(help="Parcels written by `uvl lifecycle`.")
    ],
    out_dir: Annotated[pathlib.Path, typer.Option("--out", "-o")] = pathlib.Path(
        "landuse"
    ),
    extra_override_arguments: typer.Context = None,  # ty: ignore[invalid-parameter-default]
):
    _, config = build_run_config(
        config_file, parse_override_arguments(extra_override_arguments)
    )
    with tempfile.TemporaryDirectory() as scratch:
        run = PipelineRun(config, pathlib.Path(scratch))
        run.parcels = read_parcels(parcels, run.crs)
        record = StageRecord("landuse")
        run.landuse(record)
        paths = []
        for relative in record.outputs:
            target = out_dir / pathlib.Path(relative).name
            target.parent.mkdir(parents=True, exist_ok=True)
            (pathlib.Path(scratch) / relative).replace(target)
            paths.append(target)
    print_outputs(f"Classified {len(run.parcels)} parcels", paths)
