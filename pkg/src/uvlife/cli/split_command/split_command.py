import pathlib
from typing import Annotated

import typer

from uvlife.evaluation.splitting import (
    block_split,
    buffer_exclude,
    read_samples,
    write_split,
)

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


@app.command(
    name="split",
    help=(
        "Split sample tiles into training and validation by spatial blocks, with a"
        " buffer around validation. Example: [yellow]uvl split samples.geojson"
        " split.json --seed 42[/yellow]"
    ),
)
@handle_user_errors
def cli_command_split(
    samples: Annotated[
        pathlib.Path, typer.Argument(help="GeoJSON of sample tile footprints.")
    ],
    output: Annotated[pathlib.Path, typer.Argument(help="Split JSON to write.")],
    block_size: Annotated[float, typer.Option("--block-size", min=0)] = 2000.0,
    val_fraction: Annotated[
        float, typer.Option("--val-fraction", min=0, max=1)
    ] = 0.2,
    buffer_radius: Annotated[float, typer.Option("--buffer-radius", min=0)] = 500.0,
    seed: Annotated[int, typer.Option("--seed")] = 42,
):
    result = block_split(read_samples(samples), block_size, val_fraction, seed)
    kept = buffer_exclude(result.train, result.validation, buffer_radius)
    parameters = {
        "block_size": block_size,
        "val_fraction": val_fraction,
        "buffer_radius": buffer_radius,
        "seed": seed,
    }
    write_split(output, result, kept, parameters)
    print_outputs(
        f"{len(kept)} training and {len(result.validation)} validation tiles",
        [output],
    )
