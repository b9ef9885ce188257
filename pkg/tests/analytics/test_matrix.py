import numpy as np
import pytest

from uvlife.analytics.matrix import (
    TransitionMatrix,
    build_matrix,
    read_matrix_csv,
    write_matrix_csv,
)
from uvlife.exception import UvlUserError
from uvlife.lifecycle.categories import AssignmentMethod, LandUseCategory
from uvlife.lifecycle.parcels import LifecycleParcel

UV = LandUseCategory.UrbanVillage


class TestBuildMatrix:
    def test_cells_hold_parcel_areas(self, parcels):
        matrix = build_matrix(parcels, 2015, 2019)

        assert matrix.period == (2015, 2019)
        assert matrix.cell(UV, UV) == pytest.approx(10000)
        assert matrix.cell(UV, LandUseCategory.ConstructionSite) == pytest.approx(5000)
        assert matrix.cell(LandUseCategory.Buildings, UV) == 0

    def test_area_is_conserved(self, parcels):
        matrix = build_matrix(parcels, 2019, 2023)

        total = sum(parcel.area for parcel in parcels)
        assert matrix.total == pytest.approx(total)
        assert sum(matrix.row_totals().values()) == pytest.approx(total)
        assert sum(matrix.column_totals().values()) == pytest.approx(total)

    def test_order_does_not_matter(self, parcels):
        forward = build_matrix(parcels, 2015, 2023)
        backward = build_matrix(list(reversed(parcels)), 2015, 2023)

        assert np.array_equal(forward.cells, backward.cells)

    def test_period_must_move_forward(self, parcels):
        with pytest.raises(UvlUserError, match="move forward"):
            build_matrix(parcels, 2019, 2019)

    def test_pending_parcels_are_refused(self, boxes):
        pending = LifecycleParcel(
            id="p0001",
            geometry=boxes((0, 0, 1, 1)),
            categories={2015: UV, 2019: None},
            provenance={2015: AssignmentMethod.boundary_diff, 2019: None},
        )

        with pytest.raises(UvlUserError, match="p0001 has no category for 2019"):
            build_matrix([pending], 2015, 2019)


class TestTransitionMatrix:
    def test_shape(self):
        with pytest.raises(UvlUserError, match="7x7"):
            TransitionMatrix((2015, 2019), np.zeros((3, 3)))

    def test_negative_cells(self):
        cells = np.zeros((7, 7))
        cells[0, 1] = -1

        with pytest.raises(UvlUserError, match="cannot be negative"):
            TransitionMatrix((2015, 2019), cells)

    def test_cells_are_read_only(self, parcels):
        matrix = build_matrix(parcels, 2015, 2019)

        with pytest.raises(ValueError, match="read-only"):
            matrix.cells[0, 0] = 1


class TestMatrixCsv:
    def test_written_file_reads_back(self, parcels, tmp_path):
        matrix = build_matrix(parcels, 2015, 2019)

        path = write_matrix_csv(tmp_path / "transitions_2015_2019.csv", matrix)

        assert path.read_text(encoding="utf-8").startswith(
            "from_category,to_category,area_m2"
        )
        assert np.array_equal(read_matrix_csv(path, (2015, 2019)).cells, matrix.cells)

    def test_unknown_category(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text(
            "from_category,to_category,area_m2\nUrbanVillage,Farmland,3\n",
            encoding="utf-8",
        )

        with pytest.raises(UvlUserError, match="unknown category"):
            read_matrix_csv(path, (2015, 2019))

    def test_missing_columns(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("from_category,area_m2\nUrbanVillage,3\n", encoding="utf-8")

        with pytest.raises(UvlUserError, match="to_category"):
            read_matrix_csv(path, (2015, 2019))
