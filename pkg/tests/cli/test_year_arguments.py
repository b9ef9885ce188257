import pytest

from uvlife.cli.year_arguments import parse_year_paths
from uvlife.exception import UvlUserError


@pytest.fixture
def snapshot_files(tmp_path):
    paths = {}
    for year in (2015, 2019):
        path = tmp_path / f"uv_{year}.geojson"
        path.touch()
        paths[year] = path
    return paths


class TestParseYearPaths:
    def test_sorted_by_year(self, snapshot_files):
        arguments = [f"{year}={path}" for year, path in snapshot_files.items()]

        result = parse_year_paths(list(reversed(arguments)))

        assert list(result) == [2015, 2019]
        assert result[2019] == snapshot_files[2019]

    @pytest.mark.parametrize(
        ("argument", "match"),
        [
            ("uv_2015.geojson", "should look like"),
            ("2015=", "should look like"),
            ("twenty=uv.geojson", "is not a year"),
        ],
    )
    def test_malformed_arguments(self, argument, match):
        with pytest.raises(UvlUserError, match=match):
            parse_year_paths([argument])

    def test_repeated_year(self, snapshot_files):
        path = snapshot_files[2015]

        with pytest.raises(UvlUserError, match="given twice"):
            parse_year_paths([f"2015={path}", f"2015={path}"])

    def test_missing_file(self, tmp_path):
        with pytest.raises(UvlUserError, match="does not exist"):
            parse_year_paths([f"2015={tmp_path / 'missing.geojson'}"])
