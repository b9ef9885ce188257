import pathlib
from typing import Annotated

import typer

from uvlife.schema.run_config_builder import build_scenario_script
from uvlife.synth.scenario import generate_scenario

from ..app import app
from ..error_handler import handle_user_errors
from ..output import print_outputs
from ..parse_override_arguments import parse_override_arguments


@app.command(
    name="synth",
    help=(
        "Generate a synthetic city with known ground truth from a scenario script."
        " Example: [yellow]uvl synth scenario.yaml city/ --seed 7[/yellow]"
    ),
    context_settings={"allow_extra_args": True, "ignore_unknown_options": True},
)
@handle_user_errors
def cli_command_synth(
    script_file: Annotated[
        pathlib.Path, typer.Argument(help="The YAML scenario script.")
    ],
    out_dir: Annotated[pathlib.Path, typer.Argument(help="Bundle directory.")],
    seed: Annotated[
        int | None, typer.Option("--seed", help="Overrides the script's seed.")
    ] = None,
    extra_override_arguments: typer.Context = None,  # ty: ignore[invalid-parameter-default]
):
    overrides = parse_override_arguments(extra_override_arguments)
    if seed is not None:
        overrides["seed"] = str(seed)
    bundle = generate_scenario(build_scenario_script(script_file, overrides), out_dir)
    print_outputs(f"Scenario with {len(bundle.parcels)} parcels", [bundle.config_path])
