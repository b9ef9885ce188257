import math

import numpy as np
import pytest

from uvlife.exception import UvlUserError
from uvlife.geo.grid import AffineGrid
from uvlife.landuse.transitional import (
    ImageChip,
    TransitionalVerdict,
    heuristic_transitional,
    import_transitional_labels,
    texture_features,
)
from uvlife.lifecycle.categories import LandUseCategory

VACANT = LandUseCategory.VacantLand
SITE = LandUseCategory.ConstructionSite


@pytest.fixture
def grid_20():
    return AffineGrid(origin_x=0, origin_y=20, pixel_size=1, width=20, height=20)


class TestTransitionalVerdict:
    def test_stable_category_is_rejected(self):
        with pytest.raises(UvlUserError, match="VacantLand or ConstructionSite"):
            TransitionalVerdict(LandUseCategory.Buildings, 0.9, "imported")

    def test_confidence_range(self):
        with pytest.raises(UvlUserError, match="Confidence must lie in"):
            TransitionalVerdict(VACANT, 1.5, "imported")

    def test_heuristic_needs_a_confidence(self):
        with pytest.raises(UvlUserError, match="carry a confidence"):
            TransitionalVerdict(VACANT, None, "heuristic")

    @pytest.mark.parametrize(
        ("verdict", "description"),
        [
            (
                TransitionalVerdict(SITE, 0.97, "imported", "labels.csv"),
                "imported confidence 0.97 from labels.csv",
            ),
            (TransitionalVerdict(VACANT, None, "imported"), "imported"),
            (
                TransitionalVerdict(VACANT, 0.5, "heuristic"),
                "heuristic confidence 0.50",
            ),
        ],
    )
    def test_describe(self, verdict, description):
        assert verdict.describe() == description


class TestImageChip:
    def test_shape_must_match_the_grid(self, grid_20):
        with pytest.raises(UvlUserError, match="shape"):
            ImageChip(grid_20, np.zeros((5, 5)))

    def test_luminance_must_be_finite(self, grid_20):
        luminance = np.zeros(grid_20.shape)
        luminance[3, 3] = np.nan

        with pytest.raises(UvlUserError, match="finite"):
            ImageChip(grid_20, luminance)

    def test_from_raster_cuts_the_parcel_window(self, grid_10m, boxes):
        luminance = np.arange(100, dtype=float).reshape(10, 10) / 100

        chip = ImageChip.from_raster(grid_10m, luminance, boxes((2, 2, 6, 6)))

        assert chip is not None
        assert chip.grid.shape == (4, 4)
        assert chip.cell_count == 16
        assert chip.luminance[0, 0] == luminance[4, 2]

    def test_from_raster_outside(self, grid_10m, boxes):
        luminance = np.zeros(grid_10m.shape)

        chip = ImageChip.from_raster(grid_10m, luminance, boxes((50, 50, 60, 60)))

        assert chip is None


class TestTextureFeatures:
    def test_step_edge(self, grid_20):
        luminance = np.zeros(grid_20.shape)
        luminance[:, 10:] = 0.5

        features = texture_features(ImageChip(grid_20, luminance))

        assert features.edge_density == pytest.approx(0.1)
        assert features.variance == pytest.approx(0.0625)

    def test_neighbouring_land_is_ignored(self, grid_20):
        luminance = np.zeros(grid_20.shape)
        luminance[:, 15:] = 1.0
        mask = np.zeros(grid_20.shape, dtype=bool)
        mask[:, :12] = True

        features = texture_features(ImageChip(grid_20, luminance, mask))

        assert features.edge_density == 0
        assert features.variance == 0

    def test_checkerboard_has_maximal_edge_density(self, grid_20):
        rows, cols = np.indices(grid_20.shape)
        checkerboard = ((rows + cols) % 2).astype(float)

        features = texture_features(ImageChip(grid_20, checkerboard))

        assert features.edge_density == 1.0
        assert features.variance == pytest.approx(0.25)


class TestHeuristicTransitional:
    def test_flat_ground_is_vacant_land(self, grid_20):
        verdict = heuristic_transitional(ImageChip(grid_20, np.full((20, 20), 0.4)))

        assert verdict.category is VACANT
        assert verdict.source == "heuristic"
        assert verdict.confidence == pytest.approx(1 / (1 + math.exp(-4)))

    def test_busy_ground_is_a_construction_site(self, grid_20):
        rows, cols = np.indices(grid_20.shape)
        checkerboard = ((rows + cols) % 2).astype(float)

        verdict = heuristic_transitional(ImageChip(grid_20, checkerboard))

        assert verdict.category is SITE
        assert verdict.confidence == pytest.approx(1.0)

    def test_bare_soil_is_vacant_land(self):
        grid = AffineGrid(origin_x=0, origin_y=40, pixel_size=1, width=40, height=40)
        rng = np.random.default_rng(9)
        _, cols = np.indices(grid.shape)
        soil = 0.35 + 0.15 * cols / 39 + rng.normal(0, 0.01, size=grid.shape)

        verdict = heuristic_transitional(ImageChip(grid, soil))

        assert verdict.category is VACANT
        assert verdict.confidence > 0.9

    def test_small_chips_are_refused(self):
        grid = AffineGrid(origin_x=0, origin_y=5, pixel_size=1, width=5, height=5)

        with pytest.raises(UvlUserError, match="at least 100"):
            heuristic_transitional(ImageChip(grid, np.zeros((5, 5))))


class TestImportTransitionalLabels:
    def write(self, tmp_path, text):
        path = tmp_path / "labels.csv"
        path.write_text(text, encoding="utf-8")
        return path

    def test_with_header(self, tmp_path):
        path = self.write(
            tmp_path,
            "parcel_id,category,confidence\n"
            "p17,ConstructionSite,0.97\n"
            "p18,VacantLand,\n",
        )

        labels = import_transitional_labels(path)

        expected = TransitionalVerdict(SITE, 0.97, "imported", "labels.csv")
        assert labels["p17"] == expected
        assert labels["p18"].confidence is None

    def test_without_header(self, tmp_path):
        path = self.write(tmp_path, "p1,VacantLand,0.6\n")

        assert import_transitional_labels(path)["p1"].category is VACANT

    def test_empty_file(self, tmp_path):
        assert import_transitional_labels(self.write(tmp_path, "")) == {}

    def test_identical_repeats_are_harmless(self, tmp_path):
        path = self.write(tmp_path, "p1,VacantLand,0.6\np1,VacantLand,0.6\n")

        assert len(import_transitional_labels(path)) == 1

    def test_conflicting_repeats(self, tmp_path):
        path = self.write(tmp_path, "p1,VacantLand,0.6\np1,ConstructionSite,0.6\n")

        with pytest.raises(UvlUserError, match="conflicting labels for parcel `p1`"):
            import_transitional_labels(path)

    def test_unreadable_row(self, tmp_path):
        path = self.write(tmp_path, "p1,Parking,0.6\n")

        with pytest.raises(UvlUserError, match="row 1"):
            import_transitional_labels(path)

    def test_unknown_parcels(self, tmp_path):
        path = self.write(tmp_path, "p1,VacantLand,0.6\np9,VacantLand,0.6\n")

        with pytest.raises(UvlUserError, match="unknown parcels: p9"):
            import_transitional_labels(path, known_parcel_ids=["p1"])
