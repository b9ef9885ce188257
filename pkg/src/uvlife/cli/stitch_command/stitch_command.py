import pathlib
from typing import Annotated

import typer

from uvlife.geo.io import write_mask
from uvlife.tiler.stitch import BlendMode
from uvlife.tiler.tiles import PLAN_FILE_NAME, read_plan, stitch_tile_files

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="stitch",
    help=(
        "Merge per-tile probability GeoTIFFs into one binary mask. Example:"
        " [yellow]uvl stitch tiles/ predictions/ mask.tif[/yellow]"
    ),
)
@handle_user_errors
def cli_command_stitch(
    plan_dir: Annotated[
        pathlib.Path,
        typer.Argument(help=f"Directory holding the {PLAN_FILE_NAME} of `uvl tile`."),
    ],
    tiles_dir: Annotated[
        pathlib.Path,
        typer.Argument(help="Directory of tile_NNNNN.tif probability tiles."),
    ],
    output: Annotated[pathlib.Path, typer.Argument(help="Mask GeoTIFF to write.")],
    blend: Annotated[
        BlendMode, typer.Option("--blend", help="How overlapping tiles are merged.")
    ] = BlendMode.mean,
    jobs: Annotated[int, typer.Option("--jobs", "-j", min=1)] = 1,
):
    plan, crs = read_plan(plan_dir / PLAN_FILE_NAME)
    accumulator = stitch_tile_files(plan, tiles_dir, blend, jobs)
    write_mask(output, accumulator.result(), crs)
    print_outputs("Stitched mask", [output])
