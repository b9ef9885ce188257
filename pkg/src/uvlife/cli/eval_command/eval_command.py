import pathlib
from typing import Annotated

import rich.box
import rich.table
import typer
from rich import print

from uvlife.evaluation.metrics import (
    confusion_over_tiles,
    uv_metrics,
    uv_metrics_from_rates,
)
from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_json
from uvlife.geo.crs import require_same_crs
from uvlife.geo.io import read_mask

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs


def metrics_table(values: dict[str, float | None]) -> rich.table.Table:
    table = rich.table.Table(box=rich.box.SIMPLE)
    table.add_column("Metric", style="cyan")
    table.add_column("%", justify="right")
    for name, value in values.items():
        table.add_row(name, "n/a" if value is None else f"{value:.2f}")
    return table


@app.command(
    name="eval",
    help=(
        "Score predicted masks against ground truth (pixel counts summed over all"
        " pairs). Example: [yellow]uvl eval -p pred.tif -t truth.tif[/yellow]. With"
        " [cyan]--precision[/cyan] and [cyan]--recall[/cyan] it prints the implied"
        " UV IoU instead."
    ),
)
@handle_user_errors
def cli_command_eval(
    predictions: Annotated[
        list[pathlib.Path] | None,
        typer.Option("--prediction", "-p", help="Predicted mask; repeatable."),
    ] = None,
    truths: Annotated[
        list[pathlib.Path] | None,
        typer.Option("--truth", "-t", help="Ground-truth mask; repeatable."),
    ] = None,
    precision: Annotated[
        float | None, typer.Option("--precision", min=0, max=100)
    ] = None,
    recall: Annotated[float | None, typer.Option("--recall", min=0, max=100)] = None,
    output: Annotated[
        pathlib.Path | None, typer.Option("--out", "-o", help="JSON to write.")
    ] = None,
):
    if precision is not None or recall is not None:
        if precision is None or recall is None:
            message = "Give both --precision and --recall, in percent."
            raise UvlUserError(message)
        iou = uv_metrics_from_rates(precision / 100, recall / 100)
        values: dict[str, float | None] = {"uv_iou": round(100 * iou, 2)}
        payload: dict = {"metrics_pct": values}
    else:
        predictions = predictions or []
        truths = truths or []
        if not predictions or len(predictions) != len(truths):
            message = (
                "Give the same number of --prediction and --truth masks, at least"
                f" one of each (got {len(predictions)} and {len(truths)})."
            )
            raise UvlUserError(message)
        pairs = []
        for prediction_path, truth_path in zip(predictions, truths, strict=True):
            prediction, prediction_crs = read_mask(prediction_path)
            truth, truth_crs = read_mask(truth_path)
            require_same_crs(prediction_crs, truth_crs)
            pairs.append((prediction, truth))
        counts = confusion_over_tiles(pairs)
        values = uv_metrics(counts).as_percent()
        payload = {"counts": vars(counts), "metrics_pct": values}

    print(metrics_table(values))
    if output is not None:
        print_outputs("Metrics written", [atomic_write_json(output, payload)])
