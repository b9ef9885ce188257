import pathlib
from collections.abc import Callable

import pytest
import shapely

from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.grid import AffineGrid
from uvlife.geo.polygon_set import PolygonSet

type BoxFactory = Callable[..., PolygonSet]


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--update-testdata",
        action="store_true",
        default=False,
        help="Update the updatable testdata",
    )


@pytest.fixture
def update_testdata(request: pytest.FixtureRequest) -> bool:
    return request.config.getoption("--update-testdata")


@pytest.fixture
def testdata_dir(request: pytest.FixtureRequest) -> pathlib.Path:
    module_path = pathlib.Path(request.node.module.__file__)
    module_name = module_path.stem
    base_dir = module_path.parent

    return base_dir / "testdata" / module_name


@pytest.fixture
def crs() -> ProjectedCrs:
    return ProjectedCrs(32650)


@pytest.fixture
def boxes(crs: ProjectedCrs) -> BoxFactory:
    """Factory for polygon sets of axis-aligned `(minx, miny, maxx, maxy)` boxes."""

    def make(*bounds: tuple[float, float, float, float]) -> PolygonSet:
        return PolygonSet.from_polygons([shapely.box(*b) for b in bounds], crs)

    return make


@pytest.fixture
def grid_10m() -> AffineGrid:
    """10 x 10 cells of 1 m with the top-left corner at (0, 10)."""
    return AffineGrid(origin_x=0, origin_y=10, pixel_size=1, width=10, height=10)
