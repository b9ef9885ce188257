from collections.abc import Mapping

import numpy as np

from uvlife.geo.conversion import rasterize
from uvlife.geo.grid import NO_DATA, CategoryRaster
from uvlife.geo.polygon_set import PolygonSet
from uvlife.lifecycle.categories import LandUseCategory

# Ties between equally frequent categories go to the earliest entry.
TIE_PRIORITY: tuple[LandUseCategory, ...] = (
    LandUseCategory.Buildings,
    LandUseCategory.GreenSpaces,
    LandUseCategory.Others,
    LandUseCategory.ConstructionSite,
    LandUseCategory.VacantLand,
    LandUseCategory.IncompleteDemolition,
    LandUseCategory.UrbanVillage,
)


def _priority(name: str, code: int) -> tuple[int, int]:
    names = [category.value for category in TIE_PRIORITY]
    return (names.index(name) if name in names else len(names), code)


def plurality[K](
    counts: Mapping[K, int], rank: Mapping[K, tuple[int, int]]
) -> K | None:
    """Key with the highest count; ties resolved by the lowest `rank`."""
    positive = [key for key, count in counts.items() if count > 0]
    if not positive:
        return None
    return min(positive, key=lambda key: (-counts[key], rank[key]))


def count_labels(labels: np.ndarray, inside: np.ndarray) -> dict[int, int]:
    codes, counts = np.unique(labels[inside.astype(bool)], return_counts=True)
    return {
        int(code): int(count)
        for code, count in zip(codes, counts, strict=True)
        if code != NO_DATA
    }


def dominant_category(raster: CategoryRaster, parcel: PolygonSet) -> int | None:
    """Plurality label among cells whose centers fall inside `parcel`.

    Equal counts are settled by `Buildings > GreenSpaces > Others`, then the
    transitional categories. Returns None when no labeled cell is inside,
    which sends the parcel on to transitional classification.

    Example:
        ```py
        # 50 Buildings cells and 50 GreenSpaces cells inside the parcel:
        dominant_category(raster, parcel)  # LandUseCategory.Buildings.code
        ```
    """
    window = raster.grid.clip(parcel.bounds)
    if window is None:
        return None
    rows, cols = window.offset_in(raster.grid)
    inside = rasterize(parcel, window).bits
    counts = count_labels(raster.labels[rows, cols], inside)
    rank = {code: _priority(raster.legend[code], code) for code in counts}
    return plurality(counts, rank)


def dominant_land_use(
    counts: Mapping[LandUseCategory, int],
) -> LandUseCategory | None:
    rank = {category: _priority(category.value, category.code) for category in counts}
    return plurality(counts, rank)
