from collections.abc import Callable

import pytest

from uvlife.geo.polygon_set import PolygonSet
from uvlife.landuse.assignment import EvidenceIndex
from uvlife.landuse.evidence import OsmFeature, PoiPoint
from uvlife.lifecycle.categories import AssignmentMethod, LandUseCategory
from uvlife.lifecycle.parcels import LifecycleParcel

type ParcelFactory = Callable[..., LifecycleParcel]


@pytest.fixture
def cleared_parcel() -> ParcelFactory:
    """Parcel that was an urban village in 2015 and waits for a 2019 category."""

    def make(geometry: PolygonSet, identifier: str = "p0001") -> LifecycleParcel:
        return LifecycleParcel(
            id=identifier,
            geometry=geometry,
            categories={2015: LandUseCategory.UrbanVillage, 2019: None},
            provenance={2015: AssignmentMethod.boundary_diff, 2019: None},
            demolished_area=geometry.area,
        )

    return make


@pytest.fixture
def osm(boxes):
    """OSM feature factory: `osm("building", (0, 0, 4, 10))`."""

    def make(tag_class: str, bounds: tuple[float, float, float, float]) -> OsmFeature:
        return OsmFeature(boxes(bounds), tag_class)

    return make


@pytest.fixture
def index(crs):
    def make(
        pois: list[PoiPoint] | None = None,
        osm: list[OsmFeature] | None = None,
        **kwargs,
    ) -> EvidenceIndex:
        return EvidenceIndex(pois or [], osm or [], crs, **kwargs)

    return make
