import pytest

from uvlife.exception import UvlUserError
from uvlife.lifecycle.categories import AssignmentMethod, LandUseCategory, PhaseLabel
from uvlife.lifecycle.parcels import (
    LifecycleParcel,
    build_parcels,
    find_inconsistent,
    parcel_id,
)

UV = LandUseCategory.UrbanVillage


@pytest.fixture
def snapshots(boxes):
    return {
        2015: boxes((200, 0, 300, 100), (0, 0, 100, 100)),
        2019: boxes((0, 0, 100, 100), (200, 0, 250, 100)),
        2023: boxes((0, 0, 100, 100)),
    }


class TestBuildParcels:
    def test_parcels_are_numbered_from_the_lower_left(self, snapshots, timeline):
        parcels = build_parcels(snapshots, timeline)

        assert [p.id for p in parcels] == ["p0001", "p0002"]
        assert parcels[0].geometry.bounds == (0, 0, 100, 100)

    def test_boundary_categories(self, snapshots, timeline):
        remained, shrinking = build_parcels(snapshots, timeline, delta=0.3)

        assert remained.categories == {2015: UV, 2019: UV, 2023: UV}
        assert remained.phase is PhaseLabel.Remained
        assert shrinking.categories == {
            2015: UV,
            2019: LandUseCategory.IncompleteDemolition,
            2023: None,
        }
        assert shrinking.pending_years == [2023]
        assert shrinking.demolished_area == pytest.approx(10000)

    def test_small_drift_stays_urban_village(self, boxes, timeline):
        snapshots = {
            2015: boxes((0, 0, 100, 100)),
            2019: boxes((0, 0, 100, 95)),
            2023: boxes((0, 0, 100, 90)),
        }

        (parcel,) = build_parcels(snapshots, timeline, delta=0.3)

        assert parcel.categories == {2015: UV, 2019: UV, 2023: UV}

    def test_jobs_do_not_change_the_result(self, snapshots, timeline):
        one = build_parcels(snapshots, timeline, jobs=1)
        four = build_parcels(snapshots, timeline, jobs=4)

        assert [p.categories for p in one] == [p.categories for p in four]


class TestLifecycleParcel:
    @pytest.fixture
    def pending(self, boxes):
        return LifecycleParcel(
            id=parcel_id(6),
            geometry=boxes((0, 0, 10, 10)),
            categories={2015: UV, 2019: None},
            provenance={2015: AssignmentMethod.boundary_diff, 2019: None},
        )

    def test_sequence_needs_every_year(self, pending):
        with pytest.raises(UvlUserError, match="p0007 has no category for \\[2019\\]"):
            pending.sequence()

    def test_with_category_completes_the_parcel(self, pending):
        done = pending.with_category(
            2019, LandUseCategory.GreenSpaces, AssignmentMethod.poi_osm, "osm 80%"
        )

        assert done.is_complete
        assert done.phase is PhaseLabel.Redeveloped
        assert done.evidence == {2019: "osm 80%"}
        assert pending.categories[2019] is None

    def test_unknown_year_is_rejected(self, pending):
        with pytest.raises(UvlUserError, match="2030"):
            pending.with_category(2030, UV, AssignmentMethod.manual)

    def test_empty_geometry_is_rejected(self, crs):
        from uvlife.geo.polygon_set import PolygonSet

        with pytest.raises(UvlUserError, match="empty geometry"):
            LifecycleParcel("p0001", PolygonSet.empty(crs), {}, {})


class TestFindInconsistent:
    def test_flags_impossible_partial_sequences(self, boxes):
        parcel = LifecycleParcel(
            id="p0001",
            geometry=boxes((0, 0, 10, 10)),
            categories={2015: UV, 2019: LandUseCategory.VacantLand, 2023: UV},
            provenance={2015: None, 2019: None, 2023: None},
        )

        ((flagged_id, error),) = find_inconsistent([parcel])

        assert flagged_id == "p0001"
        assert error.rule == "no-urban-village-return"

    def test_pending_years_are_skipped(self, snapshots, timeline):
        assert find_inconsistent(build_parcels(snapshots, timeline)) == []
