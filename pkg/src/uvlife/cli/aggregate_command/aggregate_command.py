import pathlib
from typing import Annotated

import typer

from uvlife.analytics.matrix import build_matrix, write_matrix_csv
from uvlife.analytics.sankey import sankey_export, write_sankey
from uvlife.analytics.zonal import read_zones, write_zonal_csv, zonal_aggregate
from uvlife.geo.io import read_features
from uvlife.lifecycle.io import read_parcels
from uvlife.lifecycle.timeline import Timeline

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="aggregate",
    help=(
        "Build transition matrices, Sankey flows and zonal tables from classified"
        " parcels. Example: [yellow]uvl aggregate landuse/parcels.geojson"
        " --timeline 2015,2019,2023 --zones districts.geojson[/yellow]"
    ),
)
@handle_user_errors
def cli_command_aggregate(
    parcels_file: Annotated[
        pathlib.Path, typer.Argument(help="Parcels written by `uvl classify`.")
    ],
    timeline: Annotated[
        str, typer.Option("--timeline", "-t", help="Years like 2015,2019,2023.")
    ],
    zones: Annotated[
        pathlib.Path | None, typer.Option("--zones", help="District polygons.")
    ] = None,
    out_dir: Annotated[pathlib.Path, typer.Option("--out", "-o")] = pathlib.Path(
        "analytics"
    ),
):
    years = Timeline.parse(timeline)
    crs = read_features(parcels_file).crs
    parcels = read_parcels(parcels_file, crs)

    paths = []
    matrices = []
    for from_year, to_year in years.periods:
        matrix = build_matrix(parcels, from_year, to_year)
        matrices.append(matrix)
        paths.append(
            write_matrix_csv(
                out_dir / f"transitions_{from_year}_{to_year}.csv", matrix
            )
        )
    paths.append(write_sankey(out_dir / "sankey.json", sankey_export(matrices)))
    if zones is not None:
        stats = zonal_aggregate(parcels, read_zones(zones, crs), years.last)
        paths.append(write_zonal_csv(out_dir / "zonal.csv", stats))
    print_outputs(f"Aggregated {len(parcels)} parcels", paths)
