import pathlib
from typing import Annotated

import typer

from uvlife.geo.io import read_mask, write_polygon_set
from uvlife.postproc.cleaning import clean_mask
from uvlife.postproc.morphology import ElementShape

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="postprocess",
    help=(
        "Clean a stitched mask with closing and opening, vectorize it and drop"
        " small patches. Example: [yellow]uvl postprocess mask.tif"
        " uv_2015.geojson[/yellow]"
    ),
)
@handle_user_errors
def cli_command_postprocess(
    mask: Annotated[pathlib.Path, typer.Argument(help="8-bit mask GeoTIFF.")],
    output: Annotated[pathlib.Path, typer.Argument(help="GeoJSON to write.")],
    element: Annotated[
        ElementShape, typer.Option("--element", help="Structuring element shape.")
    ] = ElementShape.square,
    close_radius: Annotated[int, typer.Option("--close-radius", min=1)] = 2,
    open_radius: Annotated[int, typer.Option("--open-radius", min=1)] = 2,
    min_area: Annotated[
        float,
        typer.Option("--min-area", min=0, help="Smallest patch kept, in m²."),
    ] = 400.0,
    binarize: Annotated[
        bool,
        typer.Option("--binarize", help="Treat every non-zero value as foreground."),
    ] = False,
    jobs: Annotated[int, typer.Option("--jobs", "-j", min=1)] = 1,
):
    bits, crs = read_mask(mask, binarize)
    extent = clean_mask(bits, crs, element, close_radius, open_radius, min_area, jobs)
    write_polygon_set(output, extent)
    print_outputs(f"{len(extent.polygons)} patches, {extent.area:.0f} m²", [output])
