import pytest

from uvlife.exception import CrsMismatchError, UvlUserError
from uvlife.geo.crs import ProjectedCrs, require_same_crs


class TestProjectedCrs:
    @pytest.mark.parametrize("value", ["EPSG:32650", "32650", 32650, " EPSG:32650 "])
    def test_parses_projected_metre_systems(self, value):
        crs = ProjectedCrs.from_user_input(value)

        assert crs.epsg_code == 32650
        assert str(crs) == "EPSG:32650"

    def test_returns_existing_instance(self, crs):
        assert ProjectedCrs.from_user_input(crs) is crs

    @pytest.mark.parametrize("value", ["EPSG:4326", 4326])
    def test_rejects_geographic_systems(self, value):
        with pytest.raises(UvlUserError, match="geographic"):
            ProjectedCrs.from_user_input(value)

    def test_rejects_unknown_text(self):
        with pytest.raises(UvlUserError, match="not a recognised"):
            ProjectedCrs.from_user_input("not a crs")

    def test_rejects_non_metre_units(self):
        with pytest.raises(UvlUserError, match="metre"):
            ProjectedCrs(2263, unit="US survey foot")


class TestRequireSameCrs:
    def test_returns_shared_crs(self, crs):
        assert require_same_crs(crs, ProjectedCrs(32650)) == crs

    def test_raises_on_mismatch(self, crs):
        with pytest.raises(CrsMismatchError, match="EPSG:32650 and EPSG:32649"):
            require_same_crs(crs, ProjectedCrs(32649))
