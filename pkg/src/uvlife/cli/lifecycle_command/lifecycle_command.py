import pathlib
from typing import Annotated

import typer

from uvlife.files import atomic_write_json
from uvlife.lifecycle.extents import partition
from uvlife.lifecycle.io import write_parcels
from uvlife.lifecycle.parcels import build_parcels, find_inconsistent
from uvlife.lifecycle.timeline import Timeline

from ..align_command.align_command import read_snapshots
from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="lifecycle",
    help=(
        "Cut aligned extents into parcels and label them from boundaries."
        " Example: [yellow]uvl lifecycle 2015=aligned/uv_2015.geojson"
        " 2019=aligned/uv_2019.geojson 2023=aligned/uv_2023.geojson[/yellow]"
    ),
)
@handle_user_errors
def cli_command_lifecycle(
    snapshots: Annotated[
        list[str], typer.Argument(help="Aligned yearly extents as YEAR=PATH.")
    ],
    out_dir: Annotated[pathlib.Path, typer.Option("--out", "-o")] = pathlib.Path(
        "lifecycle"
    ),
    delta: Annotated[
        float,
        typer.Option(
            "--delta", min=0, max=1, help="Shrinkage marking incomplete demolition."
        ),
    ] = 0.3,
    jobs: Annotated[int, typer.Option("--jobs", "-j", min=1)] = 1,
):
    read = read_snapshots(snapshots)
    extents = {snapshot.year: snapshot.extent for snapshot in read}
    timeline = Timeline(tuple(extents))
    crs = read[0].extent.crs

    parcels = build_parcels(extents, timeline, delta, jobs)
    for parcel_id, error in find_inconsistent(parcels):
        typer.echo(f"{parcel_id}: {error}", err=True)
    parts = partition(extents, timeline)

    paths = [
        write_parcels(out_dir / "parcels_boundary.geojson", parcels, crs),
        atomic_write_json(out_dir / "partition.json", parts.areas()),
    ]
    print_outputs(f"{len(parcels)} parcels", paths)
