import json
import logging
import pathlib
import re

import numpy as np
import pydantic

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_text, dumps_json, map_in_order
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.io import read_raster, to_unit_interval, write_raster

from .plan import TilePlan, plan_tiles
from .stitch import BlendMode, StitchAccumulator

logger = logging.getLogger(__name__)

TILE_NAME_PATTERN = re.compile(r"^tile_(\d+)\.tif$")
PLAN_FILE_NAME = "plan.json"


def tile_file_name(index: int) -> str:
    return f"tile_{index:05d}.tif"


def write_plan(path: pathlib.Path, plan: TilePlan, crs: ProjectedCrs) -> pathlib.Path:
    payload = {"crs": str(crs), **plan.model_dump(mode="json")}
    return atomic_write_text(path, dumps_json(payload))


def read_plan(path: pathlib.Path) -> tuple[TilePlan, ProjectedCrs]:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        message = f"Cannot read tile plan {path}: {e}"
        raise UvlUserError(message) from e
    crs = ProjectedCrs.from_user_input(payload.pop("crs", ""))
    try:
        plan = TilePlan.model_validate(payload)
    except pydantic.ValidationError as e:
        message = f"{path} is not a valid tile plan: {e.errors()[0]['msg']}"
        raise UvlUserError(message) from e
    return plan, crs


def cut_tiles(
    raster_path: pathlib.Path,
    out_dir: pathlib.Path,
    tile_size: int,
    stride: int,
    jobs: int = 1,
) -> TilePlan:
    """Cut a GeoTIFF into numbered window tiles plus a `plan.json` manifest."""
    full = read_raster(raster_path)
    plan = plan_tiles(full.grid, tile_size, stride)
    logger.info(
        "Cutting %s into %d tiles of %d px (stride %d)",
        raster_path,
        len(plan.windows),
        tile_size,
        stride,
    )

    def write_one(index: int) -> pathlib.Path:
        window = plan.windows[index]
        rows, cols = window.slices
        return write_raster(
            out_dir / tile_file_name(index),
            np.ascontiguousarray(full.array[rows, cols]),
            plan.grid.window(
                window.col_off, window.row_off, window.width, window.height
            ),
            full.crs,
        )

    map_in_order(write_one, list(range(len(plan.windows))), jobs)
    write_plan(out_dir / PLAN_FILE_NAME, plan, full.crs)
    return plan


def stitch_tile_files(
    plan: TilePlan,
    tiles_dir: pathlib.Path,
    blend: BlendMode = BlendMode.mean,
    jobs: int = 1,
) -> StitchAccumulator:
    """Read `tile_NNNNN.tif` probability tiles from a directory and accumulate them.

    Tiles are 8-bit (scaled by 1/255) or floating point in [0, 1].
    """
    indexed: dict[int, pathlib.Path] = {}
    for path in sorted(tiles_dir.iterdir()):
        match = TILE_NAME_PATTERN.match(path.name)
        if match:
            indexed[int(match.group(1))] = path

    extra = sorted(i for i in indexed if i >= len(plan.windows))
    missing = sorted(set(range(len(plan.windows))) - set(indexed))
    if extra or missing:
        message = (
            f"Tiles in {tiles_dir} do not match the plan: missing windows"
            f" {missing}, unexpected windows {extra}."
        )
        raise UvlUserError(message)

    accumulator = StitchAccumulator(plan, blend)

    def add_one(index: int) -> None:
        tile = read_raster(indexed[index])
        accumulator.add(index, to_unit_interval(tile.array))

    map_in_order(add_one, sorted(indexed), jobs)
    return accumulator
