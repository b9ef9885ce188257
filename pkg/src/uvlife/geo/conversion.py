"""Bridges between vector polygon sets and binary rasters."""

import numpy as np
import rasterio.features
import shapely
import shapely.geometry
from shapely.geometry import MultiPolygon

from .crs import ProjectedCrs
from .grid import AffineGrid, BinaryMask
from .polygon_set import PolygonSet


def rasterize(s: PolygonSet, grid: AffineGrid) -> BinaryMask:
    """Burn `s` into `grid`: a cell is 1 iff its center lies inside `s`.

    Parts of `s` outside the grid are clipped silently.

    Example:
        ```py
        grid = AffineGrid(origin_x=0, origin_y=10, pixel_size=1, width=10, height=10)
        rasterize(square_10m, grid).count  # 100
        ```
    """
    if s.is_empty:
        return BinaryMask.zeros(grid)
    bits = rasterio.features.rasterize(
        ((polygon, 1) for polygon in s.geometry.geoms),
        out_shape=grid.shape,
        transform=grid.transform,
        fill=0,
        all_touched=False,
        dtype="uint8",
    )
    return BinaryMask(grid, bits)


def rasterize_labels(
    shapes: list[tuple[PolygonSet, int]], grid: AffineGrid
) -> np.ndarray:
    """Burn several sets with their codes; later entries overwrite earlier ones."""
    geometries = [
        (polygon, code)
        for polygon_set, code in shapes
        for polygon in polygon_set.geometry.geoms
    ]
    if not geometries:
        return np.zeros(grid.shape, dtype=np.uint8)
    return rasterio.features.rasterize(
        geometries,
        out_shape=grid.shape,
        transform=grid.transform,
        fill=0,
        all_touched=False,
        dtype="uint8",
    )


def vectorize(mask: BinaryMask, crs: ProjectedCrs) -> PolygonSet:
    """Trace the foreground of `mask` into pixel-corner polygons.

    Foreground is 4-connected and background 8-connected, so two pixels that
    only touch diagonally become two components meeting at one vertex.
    `rasterize(vectorize(m), m.grid)` reproduces `m` exactly.
    """
    if mask.count == 0:
        return PolygonSet.empty(crs)
    polygons = [
        shapely.geometry.shape(geometry)
        for geometry, value in rasterio.features.shapes(
            mask.bits,
            mask=mask.bits.astype(bool),
            connectivity=4,
            transform=mask.grid.transform,
        )
        if value == 1
    ]
    geometry = MultiPolygon(polygons)
    if not geometry.is_valid:
        # Rings pinched at a vertex are traced as self-touching rings.
        geometry = shapely.make_valid(geometry)
    return PolygonSet.from_geometry(geometry, crs)
