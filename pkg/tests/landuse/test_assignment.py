import pytest

from uvlife.exception import CrsMismatchError, UvlUserError
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.polygon_set import PolygonSet
from uvlife.landuse.assignment import assign_redeveloped
from uvlife.landuse.evidence import PoiPoint
from uvlife.lifecycle.categories import LandUseCategory


@pytest.fixture
def parcel(boxes):
    return boxes((0, 0, 10, 10))


class TestOsmCover:
    def test_buildings_win_overlaps_regardless_of_order(self, parcel, index, osm):
        green = osm("green", (0, 0, 10, 10))
        building = osm("building", (0, 0, 4, 10))

        for features in ([green, building], [building, green]):
            cover = index(osm=features).osm_cover(parcel)

            assert cover.parcel_cells == 100
            assert cover.counts() == {
                LandUseCategory.Buildings: 40,
                LandUseCategory.GreenSpaces: 60,
            }
            assert cover.coverage == 1.0

    def test_cover_is_clipped_to_the_parcel(self, parcel, index, osm):
        cover = index(osm=[osm("road", (5, -50, 50, 50))]).osm_cover(parcel)

        assert cover.counts() == {LandUseCategory.Others: 50}
        assert cover.coverage == 0.5

    def test_unmapped_classes_carry_no_evidence(self, parcel, index, osm):
        cover = index(osm=[osm("other", (0, 0, 10, 10))]).osm_cover(parcel)

        assert cover.counts() == {}


class TestAssess:
    def test_osm_above_the_gate_decides(self, parcel, index, osm):
        assessment = index(
            pois=[PoiPoint(5, 5, "park")] * 3, osm=[osm("building", (0, 0, 10, 3))]
        ).assess(parcel)

        assert assessment.category is LandUseCategory.Buildings
        assert assessment.evidence == "osm coverage 0.30"

    def test_pois_decide_below_the_gate(self, parcel, index, osm):
        pois = [
            PoiPoint(2, 2, "park"),
            PoiPoint(3, 3, "park"),
            PoiPoint(4, 4, "commercial"),
        ]

        assessment = index(pois=pois, osm=[osm("building", (0, 0, 10, 1))]).assess(
            parcel
        )

        assert assessment.category is LandUseCategory.GreenSpaces
        assert assessment.evidence == "poi counts Buildings=1, GreenSpaces=2"

    def test_gate_is_configurable(self, parcel, index, osm):
        assessment = index(
            osm=[osm("building", (0, 0, 10, 1))], osm_coverage_gate=0.05
        ).assess(parcel)

        assert assessment.category is LandUseCategory.Buildings

    def test_pois_on_the_boundary_or_outside_do_not_count(self, parcel, index):
        pois = [PoiPoint(10, 5, "office"), PoiPoint(20, 5, "office")]

        assessment = index(pois=pois).assess(parcel)

        assert assessment.category is None
        assert assessment.evidence == "osm coverage 0.00, no pois"

    @pytest.mark.parametrize("category", ["other", "education", "medical"])
    def test_unmapped_poi_category_is_ignored(self, parcel, index, category):
        pois = [PoiPoint(5, 5, category)]

        assert index(pois=pois).assess(parcel).category is None

    def test_poi_ties_prefer_buildings(self, parcel, index):
        pois = [PoiPoint(2, 2, "transport"), PoiPoint(3, 3, "office")]

        assert index(pois=pois).assess(parcel).category is LandUseCategory.Buildings

    def test_parcel_crs_must_match(self, index):
        other = PolygonSet.empty(ProjectedCrs(32651))

        with pytest.raises(CrsMismatchError):
            index().assess(other)

    @pytest.mark.parametrize("gate", [-0.1, 1.5])
    def test_gate_range(self, index, gate):
        with pytest.raises(UvlUserError, match="osm_coverage_gate"):
            index(osm_coverage_gate=gate)


class TestAssignRedeveloped:
    def test_building_footprint(self, parcel, osm):
        category = assign_redeveloped(
            parcel, pois=[], osm=[osm("building", (0, 0, 10, 10))]
        )

        assert category is LandUseCategory.Buildings

    def test_no_evidence(self, parcel):
        assert assign_redeveloped(parcel, pois=[], osm=[]) is None
