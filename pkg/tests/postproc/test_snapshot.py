import pytest

from uvlife.exception import CrsMismatchError, UvlUserError
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.polygon_set import PolygonSet
from uvlife.postproc.snapshot import UVSnapshot, check_snapshot_years


class TestCheckSnapshotYears:
    def test_ordered_years_pass(self, boxes):
        extent = boxes((0, 0, 10, 10))

        check_snapshot_years([UVSnapshot(2015, extent), UVSnapshot(2019, extent)])

    def test_empty_list_passes(self):
        check_snapshot_years([])

    def test_duplicated_year(self, boxes):
        extent = boxes((0, 0, 10, 10))

        with pytest.raises(UvlUserError, match=r"duplicated: \[2019\]"):
            check_snapshot_years([UVSnapshot(2019, extent), UVSnapshot(2019, extent)])

    def test_unordered_years(self, boxes):
        extent = boxes((0, 0, 10, 10))

        with pytest.raises(UvlUserError, match="ordered by year"):
            check_snapshot_years([UVSnapshot(2019, extent), UVSnapshot(2015, extent)])

    def test_mixed_crs(self, boxes):
        other = PolygonSet.empty(ProjectedCrs(32651))

        with pytest.raises(CrsMismatchError):
            check_snapshot_years(
                [UVSnapshot(2015, boxes((0, 0, 10, 10))), UVSnapshot(2019, other)]
            )
