import logging
from collections import Counter
from dataclasses import dataclass

import numpy as np
import shapely

from uvlife.exception import UvlUserError
from uvlife.geo.conversion import rasterize, rasterize_labels
from uvlife.geo.crs import ProjectedCrs, require_same_crs
from uvlife.geo.grid import AffineGrid
from uvlife.geo.polygon_set import PolygonSet
from uvlife.lifecycle.categories import LandUseCategory

from .dominant import count_labels, dominant_land_use
from .evidence import OsmFeature, PoiPoint
from .vocabulary import TagMapping, default_tag_mapping

logger = logging.getLogger(__name__)

OSM_GRID_SIZE = 1.0
DEFAULT_OSM_COVERAGE_GATE = 0.2

# Burn order: later categories overwrite earlier ones where footprints overlap.
BURN_ORDER = (
    LandUseCategory.Others,
    LandUseCategory.GreenSpaces,
    LandUseCategory.Buildings,
)


@dataclass(frozen=True)
class OsmCover:
    """Per-cell OSM categories of one parcel on its 1 m grid."""

    grid: AffineGrid
    labels: np.ndarray
    inside: np.ndarray

    @property
    def parcel_cells(self) -> int:
        return int(self.inside.sum())

    def counts(self) -> dict[LandUseCategory, int]:
        return {
            LandUseCategory.from_code(code): count
            for code, count in count_labels(self.labels, self.inside).items()
        }

    @property
    def coverage(self) -> float:
        if self.parcel_cells == 0:
            return 0.0
        return sum(self.counts().values()) / self.parcel_cells


@dataclass(frozen=True)
class Assessment:
    category: LandUseCategory | None
    evidence: str


class EvidenceIndex:
    """Read-only spatial index over one year's POIs and OSM features.

    Built once per year and shared by every parcel assignment.
    """

    def __init__(
        self,
        pois: list[PoiPoint],
        osm: list[OsmFeature],
        crs: ProjectedCrs,
        mapping: TagMapping | None = None,
        osm_coverage_gate: float = DEFAULT_OSM_COVERAGE_GATE,
    ):
        if not 0 <= osm_coverage_gate <= 1:
            message = f"osm_coverage_gate must lie in [0, 1], got {osm_coverage_gate}."
            raise UvlUserError(message)
        require_same_crs(crs, *(feature.geometry.crs for feature in osm))
        self.crs = crs
        self.mapping = mapping or default_tag_mapping()
        self.osm_coverage_gate = osm_coverage_gate

        self.osm = [
            feature
            for feature in osm
            if self.mapping.osm_classes.get(feature.tag_class) is not None
        ]
        self._osm_tree = shapely.STRtree([f.geometry.geometry for f in self.osm])

        self.pois = [
            poi for poi in pois if self.mapping.poi_categories.get(poi.category)
        ]
        self._poi_tree = shapely.STRtree([shapely.Point(p.x, p.y) for p in self.pois])

    def osm_cover(self, parcel: PolygonSet) -> OsmCover:
        """Rasterize overlapping OSM classes on a 1 m grid clipped to the parcel.

        Overlaps are settled per cell by `Buildings > GreenSpaces > Others`,
        independent of feature order.
        """
        grid = AffineGrid.covering(parcel.bounds, OSM_GRID_SIZE)
        inside = rasterize(parcel, grid).bits
        candidates = self._osm_tree.query(parcel.geometry, predicate="intersects")
        hits = sorted(int(i) for i in candidates)
        by_category: dict[LandUseCategory, list[PolygonSet]] = {}
        for i in hits:
            feature = self.osm[i]
            category = self.mapping.osm_classes[feature.tag_class]
            by_category.setdefault(category, []).append(feature.geometry)
        shapes = [
            (geometry, category.code)
            for category in BURN_ORDER
            for geometry in by_category.get(category, [])
        ]
        return OsmCover(grid, rasterize_labels(shapes, grid), inside)

    def poi_counts(self, parcel: PolygonSet) -> dict[LandUseCategory, int]:
        if not self.pois:
            return {}
        hits = self._poi_tree.query(parcel.geometry, predicate="contains")
        counter: Counter[LandUseCategory] = Counter(
            self.mapping.poi_categories[self.pois[int(i)].category] for i in hits
        )
        return dict(counter)

    def assess(self, parcel: PolygonSet) -> Assessment:
        """Decide a stable category from OSM area first, then POI counts.

        OSM decides when its classes cover at least the coverage gate of the
        parcel; below the gate POIs inside the parcel decide; without either
        the parcel stays unresolved.
        """
        require_same_crs(self.crs, parcel.crs)
        cover = self.osm_cover(parcel)
        if cover.parcel_cells and cover.coverage >= self.osm_coverage_gate:
            category = dominant_land_use(cover.counts())
            if category is not None:
                return Assessment(category, f"osm coverage {cover.coverage:.2f}")

        counts = self.poi_counts(parcel)
        category = dominant_land_use(counts)
        if category is not None:
            summary = ", ".join(
                f"{key.value}={counts[key]}" for key in sorted(counts, key=_code)
            )
            return Assessment(category, f"poi counts {summary}")
        return Assessment(None, f"osm coverage {cover.coverage:.2f}, no pois")


def _code(category: LandUseCategory) -> int:
    return category.code


def assign_redeveloped(
    parcel: PolygonSet,
    pois: list[PoiPoint],
    osm: list[OsmFeature],
    mapping: TagMapping | None = None,
    osm_coverage_gate: float = DEFAULT_OSM_COVERAGE_GATE,
) -> LandUseCategory | None:
    """Stable category of a cleared parcel from POIs and OSM, or None if unresolved.

    Example:
        ```py
        assign_redeveloped(parcel, pois=[], osm=[building_over_parcel])
        # LandUseCategory.Buildings
        assign_redeveloped(parcel, pois=[], osm=[])  # None
        ```
    """
    index = EvidenceIndex(pois, osm, parcel.crs, mapping, osm_coverage_gate)
    return index.assess(parcel).category
