"""Socially sensed evidence: POI points and classified OSM footprints."""

import logging
import math
import pathlib
from dataclasses import dataclass

import pandas as pd
import shapely
from shapely.geometry import LineString, MultiLineString, Point

from uvlife.exception import UvlUserError
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.io import read_features
from uvlife.geo.polygon_set import PolygonSet, validate_polygonal

from .vocabulary import (
    OSM_CLASSES,
    POI_CATEGORIES,
    OsmClass,
    PoiCategory,
    TagMapping,
    default_tag_mapping,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PoiPoint:
    x: float
    y: float
    category: PoiCategory

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            message = f"POI coordinates must be finite, got ({self.x}, {self.y})."
            raise UvlUserError(message)
        if self.category not in POI_CATEGORIES:
            message = (
                f"Unknown POI category `{self.category}`; expected one of"
                f" {', '.join(POI_CATEGORIES)}."
            )
            raise UvlUserError(message)


@dataclass(frozen=True, eq=False)
class OsmFeature:
    """An OSM footprint already reduced to one evidence class.

    Lines are buffered into polygons at ingest, so `geometry` is always areal.
    """

    geometry: PolygonSet
    tag_class: OsmClass

    def __post_init__(self) -> None:
        if self.tag_class not in OSM_CLASSES:
            message = f"Unknown OSM class `{self.tag_class}`."
            raise UvlUserError(message)


def read_pois(path: pathlib.Path) -> list[PoiPoint]:
    """Read POIs from a CSV with `x,y,category` columns or from GeoJSON points."""
    if path.suffix.lower() in (".geojson", ".json"):
        collection = read_features(path)
        pois = []
        for index, feature in enumerate(collection.features):
            if not isinstance(feature.geometry, Point):
                message = f"{path}: POI feature {index} is not a point."
                raise UvlUserError(message)
            pois.append(
                PoiPoint(
                    feature.geometry.x,
                    feature.geometry.y,
                    str(feature.properties.get("category", "other")),
                )
            )
        return pois

    try:
        frame = pd.read_csv(path, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        return []
    missing = [c for c in ("x", "y", "category") if c not in frame.columns]
    if missing:
        message = f"{path} lacks the POI columns {missing}."
        raise UvlUserError(message)
    unknown = sorted(set(frame["category"].astype(str)) - set(POI_CATEGORIES))
    if unknown:
        message = f"{path} has unknown POI categories {unknown}."
        raise UvlUserError(message)
    return [
        PoiPoint(float(x), float(y), str(category))
        for x, y, category in frame[["x", "y", "category"]].itertuples(index=False)
    ]


def osm_feature_from_geometry(
    geometry: shapely.Geometry,
    tag_class: OsmClass,
    crs: ProjectedCrs,
    mapping: TagMapping,
    label: str,
) -> OsmFeature | None:
    """Buffer lines by their class width; polygons are validated, points skipped."""
    if isinstance(geometry, LineString | MultiLineString):
        half_width = mapping.line_width(tag_class) / 2
        areal = shapely.buffer(geometry, half_width, cap_style="flat")
        return OsmFeature(PolygonSet.from_geometry(areal, crs), tag_class)
    if geometry.geom_type in ("Polygon", "MultiPolygon"):
        validate_polygonal(geometry, label=label)
        return OsmFeature(PolygonSet.from_polygons([geometry], crs), tag_class)
    return None


def read_osm(
    path: pathlib.Path,
    crs: ProjectedCrs | None = None,
    mapping: TagMapping | None = None,
) -> list[OsmFeature]:
    """Read OSM GeoJSON whose feature properties are the raw key-value tags.

    A feature may instead carry a ready `tag_class` property. Tags matching no
    rule give the class `other`, which carries no evidence. Point features have
    no area and are skipped.
    """
    mapping = mapping or default_tag_mapping()
    collection = read_features(path, crs)
    features = []
    skipped = 0
    for index, raw in enumerate(collection.features):
        tags = raw.properties.get("tags", raw.properties)
        tag_class = raw.properties.get("tag_class") or mapping.classify_tags(tags)
        feature = osm_feature_from_geometry(
            raw.geometry,
            tag_class,
            collection.crs,
            mapping,
            label=f"{path}, feature {index}",
        )
        if feature is None or feature.geometry.is_empty:
            skipped += 1
            continue
        features.append(feature)
    if skipped:
        logger.debug("Skipped %d OSM features without area in %s", skipped, path)
    return features
