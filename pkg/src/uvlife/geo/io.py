"""GeoJSON and GeoTIFF readers and writers.

GeoJSON files declare their CRS either in a top-level `crs` member
(`{"type": "name", "properties": {"name": "EPSG:32650"}}`) or in a sidecar file
`<file>.crs` holding `EPSG:32650`. GeoTIFFs carry their CRS and affine transform.
"""

import json
import logging
import pathlib
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import rasterio
import rasterio.crs
import rasterio.errors
import rasterio.windows
import shapely.geometry
from shapely.geometry.base import BaseGeometry

from uvlife.exception import GeometryValidationError, UvlUserError
from uvlife.files import atomic_path, atomic_write_text, dumps_json

from .crs import ProjectedCrs, require_same_crs
from .grid import AffineGrid, BinaryMask, CategoryRaster
from .polygon_set import PolygonSet, validate_polygonal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Feature:
    geometry: BaseGeometry
    properties: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class FeatureCollection:
    features: list[Feature]
    crs: ProjectedCrs


def sidecar_crs_path(path: pathlib.Path) -> pathlib.Path:
    return path.with_name(f"{path.name}.crs")


def read_features(
    path: pathlib.Path, default_crs: ProjectedCrs | None = None
) -> FeatureCollection:
    """Read a GeoJSON FeatureCollection and resolve its CRS.

    Args:
        path: GeoJSON file.
        default_crs: CRS assumed when the file declares none. When the file does
            declare one, it must equal this value.

    Returns:
        The features in file order with their properties.
    """
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        message = f"Cannot read {path}: {e.strerror}."
        raise UvlUserError(message) from e
    except json.JSONDecodeError as e:
        message = f"{path} is not valid JSON: {e.msg} (line {e.lineno})."
        raise UvlUserError(message) from e

    if not isinstance(data, dict) or data.get("type") != "FeatureCollection":
        message = f"{path} is not a GeoJSON FeatureCollection."
        raise UvlUserError(message)

    crs = _declared_crs(path, data)
    if crs is None:
        if default_crs is None:
            message = (
                f"{path} declares no CRS. Add a `crs` member or a sidecar"
                f" `{sidecar_crs_path(path).name}` file."
            )
            raise UvlUserError(message)
        crs = default_crs
    elif default_crs is not None:
        require_same_crs(default_crs, crs)

    features = []
    for index, raw_feature in enumerate(data.get("features", [])):
        raw_geometry = raw_feature.get("geometry")
        if raw_geometry is None:
            message = f"{path}: feature {index} has no geometry."
            raise GeometryValidationError(message)
        try:
            geometry = shapely.geometry.shape(raw_geometry)
        except (ValueError, TypeError, AttributeError) as e:
            message = f"{path}: feature {index} has malformed geometry ({e})."
            raise GeometryValidationError(message) from e
        features.append(Feature(geometry, dict(raw_feature.get("properties") or {})))
    logger.debug("Read %d features from %s (%s)", len(features), path, crs)
    return FeatureCollection(features, crs)


def _declared_crs(path: pathlib.Path, data: dict) -> ProjectedCrs | None:
    declared = None
    member = data.get("crs")
    if isinstance(member, dict):
        declared = (member.get("properties") or {}).get("name")
    elif isinstance(member, str | int):
        declared = member

    sidecar = sidecar_crs_path(path)
    if declared is None and sidecar.is_file():
        declared = sidecar.read_text(encoding="utf-8").strip()
    if declared is None:
        return None
    return ProjectedCrs.from_user_input(declared)


def polygon_set_from_features(
    collection: FeatureCollection, source: str = "input"
) -> PolygonSet:
    """Merge every polygonal feature into one set, validating each first."""
    for index, feature in enumerate(collection.features):
        validate_polygonal(feature.geometry, label=f"{source}, feature {index}")
    return PolygonSet.from_polygons(
        (feature.geometry for feature in collection.features), collection.crs
    )


def read_polygon_set(
    path: pathlib.Path, default_crs: ProjectedCrs | None = None
) -> PolygonSet:
    return polygon_set_from_features(
        read_features(path, default_crs), source=str(path)
    )


def feature_collection_dict(
    features: list[Feature], crs: ProjectedCrs
) -> dict[str, Any]:
    return {
        "type": "FeatureCollection",
        "crs": {"type": "name", "properties": {"name": str(crs)}},
        "features": [
            {
                "type": "Feature",
                "properties": feature.properties,
                "geometry": shapely.geometry.mapping(feature.geometry),
            }
            for feature in features
        ],
    }


def write_features(
    path: pathlib.Path, features: list[Feature], crs: ProjectedCrs
) -> pathlib.Path:
    return atomic_write_text(path, dumps_json(feature_collection_dict(features, crs)))


def write_polygon_set(
    path: pathlib.Path, s: PolygonSet, properties: dict[str, Any] | None = None
) -> pathlib.Path:
    """Write one feature per connected component, in lower-left order."""
    features = [
        Feature(polygon, {"component": index, **(properties or {})})
        for index, polygon in enumerate(s.polygons)
    ]
    return write_features(path, features, s.crs)


# GeoTIFF


@dataclass(frozen=True)
class RasterData:
    grid: AffineGrid
    array: np.ndarray
    crs: ProjectedCrs
    tags: dict[str, str]


def read_raster(
    path: pathlib.Path, window: rasterio.windows.Window | None = None
) -> RasterData:
    """Read band 1 of a single-band GeoTIFF (optionally one window of it)."""
    try:
        with rasterio.open(path) as dataset:
            if dataset.count != 1:
                message = f"{path} has {dataset.count} bands; expected one."
                raise UvlUserError(message)
            if dataset.crs is None:
                message = f"{path} has no CRS."
                raise UvlUserError(message)
            crs = ProjectedCrs.from_user_input(dataset.crs.to_string())
            array = dataset.read(1, window=window)
            transform = (
                dataset.window_transform(window) if window else dataset.transform
            )
            tags = dict(dataset.tags())
    except rasterio.errors.RasterioIOError as e:
        message = f"Cannot read raster {path}: {e}"
        raise UvlUserError(message) from e
    grid = AffineGrid.from_transform(transform, array.shape[1], array.shape[0])
    return RasterData(grid, array, crs, tags)


def write_raster(
    path: pathlib.Path,
    array: np.ndarray,
    grid: AffineGrid,
    crs: ProjectedCrs,
    tags: dict[str, str] | None = None,
) -> pathlib.Path:
    """Write a single-band, deflate-compressed GeoTIFF atomically."""
    profile = {
        "driver": "GTiff",
        "width": grid.width,
        "height": grid.height,
        "count": 1,
        "dtype": array.dtype.name,
        "crs": rasterio.crs.CRS.from_epsg(crs.epsg_code),
        "transform": grid.transform,
        "compress": "deflate",
    }
    with atomic_path(path) as temporary_path:
        with rasterio.open(temporary_path, "w", **profile) as dataset:
            dataset.write(array, 1)
            if tags:
                dataset.update_tags(**tags)
    return path


def read_mask(
    path: pathlib.Path, binarize: bool = False
) -> tuple[BinaryMask, ProjectedCrs]:
    """Read an 8-bit mask; any non-zero value counts as 1 only when `binarize`."""
    raster = read_raster(path)
    bits = raster.array
    if binarize:
        bits = (bits != 0).astype(np.uint8)
    elif not np.isin(bits, (0, 1)).all():
        message = (
            f"{path} holds values other than 0 and 1. Pass `--binarize` to treat"
            " every non-zero value as foreground."
        )
        raise UvlUserError(message)
    return BinaryMask(raster.grid, bits), raster.crs


def write_mask(path: pathlib.Path, mask: BinaryMask, crs: ProjectedCrs) -> pathlib.Path:
    return write_raster(path, mask.bits, mask.grid, crs)


def read_category_raster(
    path: pathlib.Path, legend: dict[int, str] | None = None
) -> tuple[CategoryRaster, ProjectedCrs]:
    """Read a label raster; the legend comes from the `legend` tag or the argument."""
    raster = read_raster(path)
    if "legend" in raster.tags:
        stored = json.loads(raster.tags["legend"])
        legend = {int(code): name for code, name in stored.items()}
    if legend is None:
        message = f"{path} has no `legend` tag and no legend was given."
        raise UvlUserError(message)
    return CategoryRaster(raster.grid, raster.array, legend), raster.crs


def write_category_raster(
    path: pathlib.Path, raster: CategoryRaster, crs: ProjectedCrs
) -> pathlib.Path:
    legend = json.dumps({str(k): v for k, v in raster.legend.items()}, sort_keys=True)
    return write_raster(path, raster.labels, raster.grid, crs, tags={"legend": legend})


def to_unit_interval(array: np.ndarray) -> np.ndarray:
    """Map 8-bit values to [0, 1]; floating rasters must already be in range."""
    if array.dtype == np.uint8:
        return array.astype(np.float64) / 255.0
    values = array.astype(np.float64)
    if not np.isfinite(values).all() or values.min() < 0 or values.max() > 1:
        message = "Floating-point rasters must hold finite values in [0, 1]."
        raise UvlUserError(message)
    return values
