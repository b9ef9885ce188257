from .conversion import rasterize, rasterize_labels, vectorize
from .crs import ProjectedCrs, require_same_crs
from .grid import AffineGrid, BinaryMask, CategoryRaster
from .polygon_set import (
    SLIVER_AREA,
    SNAP_TOLERANCE,
    PolygonSet,
    area,
    difference,
    intersection,
    intersection_all,
    intersection_area,
    iou,
    union,
    union_all,
)

__all__ = [
    "SLIVER_AREA",
    "SNAP_TOLERANCE",
    "AffineGrid",
    "BinaryMask",
    "CategoryRaster",
    "PolygonSet",
    "ProjectedCrs",
    "area",
    "difference",
    "intersection",
    "intersection_all",
    "intersection_area",
    "iou",
    "rasterize",
    "rasterize_labels",
    "require_same_crs",
    "union",
    "union_all",
    "vectorize",
]
