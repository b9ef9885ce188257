import functools
import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
import shapely
import shapely.affinity
from shapely.geometry import GeometryCollection, MultiPolygon, Polygon
from shapely.geometry.base import BaseGeometry

from uvlife.exception import GeometryValidationError

from .crs import ProjectedCrs, require_same_crs

# Coordinates of boolean-operation results are snapped to this grid (metres).
SNAP_TOLERANCE = 1e-6
# Polygon parts smaller than this (square metres) are slivers and are dropped.
SLIVER_AREA = 1e-4


@dataclass(frozen=True, eq=False)
class PolygonSet:
    """A planar point set made of interior-disjoint polygons in one projected CRS.

    Instances are immutable. Constructors either validate user geometry
    (`from_polygons`) or wrap the output of a GEOS operation (`from_geometry`);
    both keep the invariant that `geometry` is a valid `MultiPolygon`.
    """

    geometry: MultiPolygon
    crs: ProjectedCrs

    def __post_init__(self) -> None:
        if not isinstance(self.geometry, MultiPolygon):
            message = f"Expected a MultiPolygon, got {self.geometry.geom_type}."
            raise GeometryValidationError(message)
        if not self.geometry.is_empty and not self.geometry.is_valid:
            explain_invalid(list(self.geometry.geoms))

    @classmethod
    def empty(cls, crs: ProjectedCrs) -> "PolygonSet":
        return cls(MultiPolygon(), crs)

    @classmethod
    def from_polygons(
        cls, polygons: Iterable[BaseGeometry], crs: ProjectedCrs
    ) -> "PolygonSet":
        """Validate user polygons and merge them into one set.

        Why:
            Ingested features (parcels drawn by hand, vectorised masks, OSM
            footprints) may touch or overlap each other. As a point set they are
            merged; but each individual polygon must be valid, because repairing
            grossly invalid input would hide data-preparation errors.

        Example:
            ```py
            s = PolygonSet.from_polygons([box(0, 0, 1, 1), box(1, 0, 2, 1)], crs)
            s.area  # 2.0, one component
            ```

        Args:
            polygons: Polygon or MultiPolygon geometries.
            crs: CRS of the coordinates.

        Returns:
            Validated polygon set.
        """
        polygon_list = list(polygons)
        for index, polygon in enumerate(polygon_list):
            validate_polygonal(polygon, label=f"polygon {index}")
        polygon_list = [p for p in polygon_list if not p.is_empty]
        if not polygon_list:
            return cls.empty(crs)
        if len(polygon_list) == 1 and isinstance(polygon_list[0], Polygon):
            return cls.from_geometry(polygon_list[0], crs)
        return cls.from_geometry(
            shapely.union_all(polygon_list, grid_size=SNAP_TOLERANCE), crs
        )

    @classmethod
    def from_geometry(cls, geometry: BaseGeometry, crs: ProjectedCrs) -> "PolygonSet":
        """Wrap a valid geometry, keeping polygonal parts above the sliver area."""
        return cls(MultiPolygon(polygonal_parts(geometry)), crs)

    @property
    def area(self) -> float:
        return float(self.geometry.area)

    @property
    def is_empty(self) -> bool:
        return self.geometry.is_empty

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        minx, miny, maxx, maxy = self.geometry.bounds
        return (float(minx), float(miny), float(maxx), float(maxy))

    @property
    def polygons(self) -> list[Polygon]:
        """Connected components ordered by their lower-left bounding corner."""
        return sorted(self.geometry.geoms, key=_lower_left_key)

    def components(self) -> list["PolygonSet"]:
        return [PolygonSet(MultiPolygon([p]), self.crs) for p in self.polygons]

    def translate(self, dx: float, dy: float) -> "PolygonSet":
        return PolygonSet.from_geometry(
            shapely.affinity.translate(self.geometry, xoff=dx, yoff=dy), self.crs
        )


def _lower_left_key(polygon: Polygon) -> tuple[float, float, float]:
    minx, miny, _, _ = polygon.bounds
    return (round(miny, 6), round(minx, 6), -polygon.area)


def polygonal_parts(geometry: BaseGeometry) -> list[Polygon]:
    """Flatten any geometry into its polygons, dropping slivers and lower dimensions.

    Intersections of touching squares yield lines or points; those carry no area
    and are discarded here, as are polygon parts below `SLIVER_AREA`.
    """
    parts: list[Polygon] = []
    if geometry is None or geometry.is_empty:
        return parts
    for part in shapely.get_parts(geometry):
        if isinstance(part, Polygon):
            if part.area >= SLIVER_AREA:
                parts.append(part)
        elif isinstance(part, MultiPolygon | GeometryCollection):
            parts.extend(polygonal_parts(part))
    return parts


def validate_polygonal(geometry: BaseGeometry, label: str) -> None:
    """Raise `GeometryValidationError` naming the offending ring of `geometry`.

    Example:
        ```py
        bowtie = Polygon([(0, 0), (2, 2), (2, 0), (0, 1)])
        validate_polygonal(bowtie, "feature 3")
        # GeometryValidationError: feature 3: exterior ring self-intersects
        ```
    """
    if isinstance(geometry, MultiPolygon):
        explain_invalid(list(geometry.geoms), label=label)
        return
    if not isinstance(geometry, Polygon):
        message = f"{label} is a {geometry.geom_type}, not a polygon."
        raise GeometryValidationError(message)
    if geometry.is_empty:
        return

    rings = [("exterior ring", geometry.exterior)] + [
        (f"hole {j}", ring) for j, ring in enumerate(geometry.interiors)
    ]
    for ring_name, ring in rings:
        coordinates = np.asarray(ring.coords)
        if not np.isfinite(coordinates).all():
            message = f"{label}: {ring_name} has non-finite coordinates."
            raise GeometryValidationError(message)
        if len(coordinates) < 4 or Polygon(ring).area == 0:
            message = f"{label}: {ring_name} is degenerate (no area)."
            raise GeometryValidationError(message)
        if not ring.is_simple:
            message = f"{label}: {ring_name} self-intersects."
            raise GeometryValidationError(message)

    shell = Polygon(geometry.exterior)
    for j, ring in enumerate(geometry.interiors):
        if not shapely.contains_properly(shell, Polygon(ring)):
            message = f"{label}: hole {j} is not strictly inside the exterior ring."
            raise GeometryValidationError(message)

    if not geometry.is_valid:
        message = f"{label}: {shapely.is_valid_reason(geometry)}."
        raise GeometryValidationError(message)


def explain_invalid(polygons: list[Polygon], label: str = "polygon set") -> None:
    """Find which polygon or which pair of polygons breaks validity and raise."""
    for index, polygon in enumerate(polygons):
        validate_polygonal(polygon, label=f"{label}, component {index}")
    tree = shapely.STRtree(polygons)
    for index, polygon in enumerate(polygons):
        for other in tree.query(polygon, predicate="intersects"):
            other = int(other)
            if other <= index:
                continue
            shared = shapely.intersection(polygon, polygons[other])
            if shared.area > 0 or shared.geom_type in (
                "LineString",
                "MultiLineString",
            ):
                message = (
                    f"{label}: components {index} and {other} overlap or share an"
                    " edge; components must be interior-disjoint."
                )
                raise GeometryValidationError(message)
    if polygons:
        multi = MultiPolygon(polygons)
        if not multi.is_valid:
            message = f"{label}: {shapely.is_valid_reason(multi)}."
            raise GeometryValidationError(message)


def area(s: PolygonSet) -> float:
    """Area in square metres: exteriors minus holes, never negative."""
    return s.area


def union(a: PolygonSet, b: PolygonSet) -> PolygonSet:
    crs = require_same_crs(a.crs, b.crs)
    return PolygonSet.from_geometry(
        shapely.union(a.geometry, b.geometry, grid_size=SNAP_TOLERANCE), crs
    )


def intersection(a: PolygonSet, b: PolygonSet) -> PolygonSet:
    crs = require_same_crs(a.crs, b.crs)
    return PolygonSet.from_geometry(
        shapely.intersection(a.geometry, b.geometry, grid_size=SNAP_TOLERANCE), crs
    )


def difference(a: PolygonSet, b: PolygonSet) -> PolygonSet:
    crs = require_same_crs(a.crs, b.crs)
    return PolygonSet.from_geometry(
        shapely.difference(a.geometry, b.geometry, grid_size=SNAP_TOLERANCE), crs
    )


def union_all(sets: Iterable[PolygonSet], crs: ProjectedCrs) -> PolygonSet:
    """Union of any number of sets; the empty union is the empty set in `crs`."""
    set_list = list(sets)
    if not set_list:
        return PolygonSet.empty(crs)
    require_same_crs(crs, *(s.crs for s in set_list))
    merged = shapely.union_all(
        [s.geometry for s in set_list], grid_size=SNAP_TOLERANCE
    )
    return PolygonSet.from_geometry(merged, crs)


def intersection_all(sets: Iterable[PolygonSet]) -> PolygonSet:
    set_list = list(sets)
    if not set_list:
        message = "The intersection of zero sets is undefined."
        raise GeometryValidationError(message)
    return functools.reduce(intersection, set_list)


def intersection_area(a: PolygonSet, b: PolygonSet) -> float:
    return intersection(a, b).area


def iou(a: PolygonSet, b: PolygonSet) -> float:
    """Intersection over union of two sets; 0 when both are empty."""
    overlap = intersection_area(a, b)
    union_area = a.area + b.area - overlap
    if union_area <= 0 or math.isclose(union_area, 0.0):
        return 0.0
    return overlap / union_area
