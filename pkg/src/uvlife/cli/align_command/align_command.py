import pathlib
from typing import Annotated

import typer

from uvlife.geo.crs import require_same_crs
from uvlife.geo.io import read_features, read_polygon_set, write_polygon_set
from uvlife.postproc.alignment import (
    align_temporal,
    apply_manual_edits,
    manual_edits_from_features,
)
from uvlife.postproc.snapshot import UVSnapshot

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs
from ..year_arguments import parse_year_paths


def read_snapshots(snapshot_arguments: list[str]) -> list[UVSnapshot]:
    """Read `YEAR=PATH` snapshot arguments in year order."""
    snapshots = [
        UVSnapshot(year, read_polygon_set(path), path.name)
        for year, path in parse_year_paths(snapshot_arguments).items()
    ]
    require_same_crs(*(snapshot.extent.crs for snapshot in snapshots))
    return snapshots


@app.command(
    name="align",
    help=(
        "Snap later-year boundaries onto matching earliest-year boundaries."
        " Example: [yellow]uvl align 2015=uv_2015.geojson 2019=uv_2019.geojson"
        " --out aligned/[/yellow]"
    ),
)
@handle_user_errors
def cli_command_align(
    snapshots: Annotated[
        list[str], typer.Argument(help="Yearly extents as YEAR=PATH.")
    ],
    out_dir: Annotated[pathlib.Path, typer.Option("--out", "-o")] = pathlib.Path(
        "aligned"
    ),
    iou_threshold: Annotated[
        float, typer.Option("--iou-threshold", min=0, max=1)
    ] = 0.9,
    overrides: Annotated[
        pathlib.Path | None,
        typer.Option(
            "--overrides", help="GeoJSON of verified `add`/`remove` edits per year."
        ),
    ] = None,
):
    read = read_snapshots(snapshots)
    aligned = align_temporal(read, iou_threshold)
    if overrides is not None:
        edits = manual_edits_from_features(read_features(overrides, read[0].extent.crs))
        aligned = apply_manual_edits(aligned, edits)
    paths = [
        write_polygon_set(
            out_dir / f"uv_{snapshot.year}.geojson",
            snapshot.extent,
            {"year": snapshot.year, "provenance": snapshot.provenance},
        )
        for snapshot in aligned
    ]
    print_outputs("Aligned extents", paths)
