"""Area-weighted aggregation of parcel categories into administrative zones."""

import logging
import math
import pathlib
from collections.abc import Sequence
from dataclasses import dataclass, field

import pandas as pd
import shapely

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_csv
from uvlife.geo.crs import ProjectedCrs, require_same_crs
from uvlife.geo.io import read_features
from uvlife.geo.polygon_set import (
    SLIVER_AREA,
    PolygonSet,
    intersection_area,
    validate_polygonal,
)
from uvlife.lifecycle.categories import LandUseCategory, Pathway
from uvlife.lifecycle.parcels import LifecycleParcel

logger = logging.getLogger(__name__)

OUTSIDE_ZONE_ID = "outside"


@dataclass(frozen=True, eq=False)
class Zone:
    id: str
    name: str
    geometry: PolygonSet


@dataclass
class ZoneStats:
    zone_id: str
    name: str
    category_areas: dict[LandUseCategory, list[float]] = field(
        default_factory=lambda: {category: [] for category in LandUseCategory}
    )
    pathway_areas: dict[Pathway, list[float]] = field(
        default_factory=lambda: {pathway: [] for pathway in Pathway}
    )

    def add(
        self, category: LandUseCategory, pathway: Pathway | None, area: float
    ) -> None:
        self.category_areas[category].append(area)
        if pathway is not None:
            self.pathway_areas[pathway].append(area)

    def category_totals(self) -> dict[LandUseCategory, float]:
        return {key: math.fsum(values) for key, values in self.category_areas.items()}

    def pathway_totals(self) -> dict[Pathway, float]:
        return {key: math.fsum(values) for key, values in self.pathway_areas.items()}

    @property
    def total(self) -> float:
        return math.fsum(
            area for values in self.category_areas.values() for area in values
        )


def check_zones(zones: Sequence[Zone]) -> None:
    """Require unique ids, one CRS and no overlap between zones."""
    ids = [zone.id for zone in zones]
    duplicates = sorted({zone_id for zone_id in ids if ids.count(zone_id) > 1})
    if duplicates:
        message = f"Zone ids must be unique; duplicated: {duplicates}."
        raise UvlUserError(message)
    if OUTSIDE_ZONE_ID in ids:
        message = f"`{OUTSIDE_ZONE_ID}` is reserved and cannot be a zone id."
        raise UvlUserError(message)
    if not zones:
        return
    require_same_crs(*(zone.geometry.crs for zone in zones))

    tree = shapely.STRtree([zone.geometry.geometry for zone in zones])
    overlapping = []
    for i, zone in enumerate(zones):
        for j in tree.query(zone.geometry.geometry, predicate="intersects"):
            if j <= i:
                continue
            if intersection_area(zone.geometry, zones[j].geometry) > SLIVER_AREA:
                overlapping.append(f"{zone.id}/{zones[j].id}")
    if overlapping:
        message = f"Zones must not overlap; overlapping pairs: {overlapping}."
        raise UvlUserError(message)


def zonal_aggregate(
    parcels: Sequence[LifecycleParcel], zones: Sequence[Zone], year: int
) -> list[ZoneStats]:
    """Split every parcel's area among the zones it intersects.

    The part of a parcel outside all zones goes to the `outside` bucket, so the
    sum over all returned rows equals the total parcel area.

    Returns:
        One row per zone in input order, then the outside bucket.
    """
    check_zones(zones)
    stats = [ZoneStats(zone.id, zone.name) for zone in zones]
    outside = ZoneStats(OUTSIDE_ZONE_ID, "Outside all zones")
    tree = shapely.STRtree([zone.geometry.geometry for zone in zones])
    for parcel in parcels:
        category = parcel.category_at(year)
        pathway = parcel.pathway
        inside = []
        for index in sorted(
            tree.query(parcel.geometry.geometry, predicate="intersects")
        ):
            shared = intersection_area(parcel.geometry, zones[index].geometry)
            if shared > 0:
                stats[index].add(category, pathway, shared)
                inside.append(shared)
        remainder = parcel.area - math.fsum(inside)
        if remainder > 0:
            outside.add(category, pathway, remainder)
    logger.info("Aggregated %d parcels into %d zones", len(parcels), len(zones))
    return [*stats, outside]


def read_zones(path: pathlib.Path, crs: ProjectedCrs | None = None) -> list[Zone]:
    """Zones from GeoJSON; `id` and `name` properties, defaulting to the index."""
    collection = read_features(path, crs)
    zones = []
    for index, feature in enumerate(collection.features):
        validate_polygonal(feature.geometry, label=f"{path}, zone {index}")
        zone_id = str(feature.properties.get("id", f"z{index + 1:03d}"))
        zones.append(
            Zone(
                id=zone_id,
                name=str(feature.properties.get("name", zone_id)),
                geometry=PolygonSet.from_polygons([feature.geometry], collection.crs),
            )
        )
    check_zones(zones)
    return zones


def zonal_frame(stats: Sequence[ZoneStats]) -> pd.DataFrame:
    rows = []
    for row in stats:
        record: dict[str, str | float] = {"zone_id": row.zone_id, "name": row.name}
        for category, area in row.category_totals().items():
            record[f"{category.value}_m2"] = area
        for pathway, area in row.pathway_totals().items():
            record[f"{pathway.value}_m2"] = area
        record["total_m2"] = row.total
        rows.append(record)
    return pd.DataFrame(rows)


def write_zonal_csv(path: pathlib.Path, stats: Sequence[ZoneStats]) -> pathlib.Path:
    return atomic_write_csv(path, zonal_frame(stats))
