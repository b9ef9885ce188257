import pathlib

import pytest

CONFIG = """\
city: Testville
crs: EPSG:32650
timeline: [2015, 2019, 2023]
years:
  2015: {snapshot: uv_2015.geojson}
  2019: {snapshot: uv_2019.geojson, pois: pois_2019.csv}
  2023: {snapshot: uv_2023.geojson}
parameters:
  delta: 0.3
"""


@pytest.fixture
def config_text() -> str:
    return CONFIG


@pytest.fixture
def input_file_path(tmp_path: pathlib.Path, config_text: str) -> pathlib.Path:
    """A run configuration next to the (empty) files it references."""
    for name in (
        "uv_2015.geojson",
        "uv_2019.geojson",
        "uv_2023.geojson",
        "pois_2019.csv",
    ):
        (tmp_path / name).touch()
    path = tmp_path / "config.yaml"
    path.write_text(config_text, encoding="utf-8")
    return path
