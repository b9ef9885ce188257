import pathlib
from typing import Annotated

import typer

from uvlife.tiler.plan import DEFAULT_STRIDE, DEFAULT_TILE_SIZE
from uvlife.tiler.tiles import cut_tiles

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="tile",
    help=(
        "Cut a GeoTIFF into overlapping tiles. Example: [yellow]uvl tile scene.tif"
        " tiles/[/yellow]"
    ),
)
@handle_user_errors
def cli_command_tile(
    raster: Annotated[pathlib.Path, typer.Argument(help="Single-band GeoTIFF.")],
    out_dir: Annotated[
        pathlib.Path, typer.Argument(help="Directory for the tiles and plan.json.")
    ],
    tile_size: Annotated[
        int, typer.Option("--tile-size", min=1, help="Tile edge in pixels.")
    ] = DEFAULT_TILE_SIZE,
    stride: Annotated[
        int, typer.Option("--stride", min=1, help="Step between tiles in pixels.")
    ] = DEFAULT_STRIDE,
    jobs: Annotated[int, typer.Option("--jobs", "-j", min=1)] = 1,
):
    plan = cut_tiles(raster, out_dir, tile_size, stride, jobs)
    print_outputs(f"Cut {len(plan.windows)} tiles", [out_dir])
