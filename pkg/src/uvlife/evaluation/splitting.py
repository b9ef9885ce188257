"""Leakage-safe train/validation splits by geographic blocks and buffers."""

import dataclasses
import logging
import math
import pathlib
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.spatial import cKDTree

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_json
from uvlife.geo.io import read_features

logger = logging.getLogger(__name__)

type Role = Literal["train", "validation"]


@dataclass(frozen=True)
class SampleTile:
    id: str
    x: float
    y: float
    role: Role | None = None


@dataclass(frozen=True)
class SplitResult:
    train: list[SampleTile]
    validation: list[SampleTile]
    validation_blocks: list[tuple[int, int]]
    block_count: int

    @property
    def validation_share(self) -> float:
        total = len(self.train) + len(self.validation)
        return len(self.validation) / total if total else 0.0


def block_key(
    tile: SampleTile, origin: tuple[float, float], block_size: float
) -> tuple[int, int]:
    return (
        math.floor((tile.x - origin[0]) / block_size),
        math.floor((tile.y - origin[1]) / block_size),
    )


def block_split(
    samples: Sequence[SampleTile],
    block_size: float,
    val_fraction: float,
    seed: int,
) -> SplitResult:
    """Assign whole blocks of a square lattice to validation.

    The lattice starts at the minimum sample coordinates. Non-empty blocks are
    shuffled with `seed` and moved to validation one by one until the
    validation share of tiles first reaches `val_fraction`; at least one block
    always stays in training.

    Example:
        ```py
        result = block_split(tiles, block_size=2000, val_fraction=0.2, seed=42)
        result.validation_share  # >= 0.2
        ```
    """
    if block_size <= 0:
        message = f"block_size must be positive, got {block_size}."
        raise UvlUserError(message)
    if not 0 < val_fraction < 1:
        message = f"val_fraction must lie in (0, 1), got {val_fraction}."
        raise UvlUserError(message)
    ids = [tile.id for tile in samples]
    if len(set(ids)) != len(ids):
        message = "Sample tile ids must be unique."
        raise UvlUserError(message)

    origin = (
        min((tile.x for tile in samples), default=0.0),
        min((tile.y for tile in samples), default=0.0),
    )
    blocks: dict[tuple[int, int], list[SampleTile]] = {}
    for tile in samples:
        blocks.setdefault(block_key(tile, origin, block_size), []).append(tile)
    if len(blocks) < 2:
        message = (
            f"The samples fall into {len(blocks)} block(s) of {block_size} m; at"
            " least two are needed. Use a smaller block size."
        )
        raise UvlUserError(message)

    keys = sorted(blocks)
    order = np.random.default_rng(seed).permutation(len(keys))
    validation_keys: list[tuple[int, int]] = []
    validation_count = 0
    for position in order[:-1]:
        if validation_count >= val_fraction * len(samples):
            break
        key = keys[int(position)]
        validation_keys.append(key)
        validation_count += len(blocks[key])

    chosen = set(validation_keys)
    train, validation = [], []
    for tile in samples:
        if block_key(tile, origin, block_size) in chosen:
            validation.append(dataclasses.replace(tile, role="validation"))
        else:
            train.append(dataclasses.replace(tile, role="train"))
    logger.info(
        "Block split: %d of %d blocks (%d tiles) to validation",
        len(chosen),
        len(keys),
        len(validation),
    )
    return SplitResult(train, validation, sorted(chosen), len(keys))


def buffer_exclude(
    train: Sequence[SampleTile], validation: Sequence[SampleTile], radius: float
) -> list[SampleTile]:
    """Drop training tiles whose centroid lies within `radius` of a validation tile.

    Kept tiles are strictly farther than `radius` from every validation tile.
    """
    if radius < 0:
        message = f"The buffer radius must not be negative, got {radius}."
        raise UvlUserError(message)
    if radius == 0 or not validation or not train:
        return list(train)
    tree = cKDTree(np.array([(tile.x, tile.y) for tile in validation]))
    distances, _ = tree.query(np.array([(tile.x, tile.y) for tile in train]), k=1)
    kept = [tile for tile, d in zip(train, distances, strict=True) if d > radius]
    logger.info(
        "Buffer of %s m removed %d training tiles", radius, len(train) - len(kept)
    )
    return kept


def read_samples(path: pathlib.Path) -> list[SampleTile]:
    """Read sample tiles from GeoJSON; each feature's centroid is the tile position.

    The tile id comes from the `id` property, falling back to the feature index.
    """
    collection = read_features(path)
    tiles = []
    for index, feature in enumerate(collection.features):
        centroid = feature.geometry.centroid
        if centroid.is_empty:
            message = f"{path}: feature {index} has an empty geometry."
            raise UvlUserError(message)
        tile_id = str(feature.properties.get("id", index))
        tiles.append(SampleTile(tile_id, float(centroid.x), float(centroid.y)))
    return tiles


def split_payload(
    result: SplitResult,
    kept_train: list[SampleTile],
    parameters: dict[str, float | int],
) -> dict:
    kept_ids = {tile.id for tile in kept_train}
    return {
        "parameters": parameters,
        "block_count": result.block_count,
        "validation_blocks": [list(key) for key in result.validation_blocks],
        "train": sorted(kept_ids),
        "validation": sorted(tile.id for tile in result.validation),
        "excluded": sorted(tile.id for tile in result.train if tile.id not in kept_ids),
        "validation_share": round(result.validation_share, 6),
    }


def write_split(
    path: pathlib.Path,
    result: SplitResult,
    kept_train: list[SampleTile],
    parameters: dict[str, float | int],
) -> pathlib.Path:
    return atomic_write_json(path, split_payload(result, kept_train, parameters))
