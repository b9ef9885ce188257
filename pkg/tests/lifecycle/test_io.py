import json

import pandas as pd
import pytest

from uvlife.lifecycle.categories import AssignmentMethod, LandUseCategory
from uvlife.lifecycle.io import read_parcels, write_parcels, write_parcels_csv
from uvlife.lifecycle.parcels import LifecycleParcel

UV = LandUseCategory.UrbanVillage


@pytest.fixture
def parcels(boxes):
    return [
        LifecycleParcel(
            id="p0002",
            geometry=boxes((200, 0, 300, 100)),
            categories={2015: UV, 2019: LandUseCategory.VacantLand},
            provenance={
                2015: AssignmentMethod.boundary_diff,
                2019: AssignmentMethod.raster_classifier,
            },
            demolished_area=10000,
            evidence={2019: "raster VacantLand 91%"},
        ),
        LifecycleParcel(
            id="p0001",
            geometry=boxes((0, 0, 100, 100)),
            categories={2015: UV, 2019: None},
            provenance={2015: AssignmentMethod.boundary_diff, 2019: None},
        ),
    ]


class TestWriteParcels:
    def test_features_are_sorted_with_nested_years(self, tmp_path, parcels, crs):
        path = write_parcels(tmp_path / "parcels.geojson", parcels, crs)
        features = json.loads(path.read_text(encoding="utf-8"))["features"]

        assert [f["properties"]["id"] for f in features] == ["p0001", "p0002"]
        second = features[1]["properties"]
        assert second["phase"] == "Demolished"
        assert second["pathway"] == "delayed"
        assert second["categories"] == {"2015": "UrbanVillage", "2019": "VacantLand"}
        assert features[0]["properties"]["phase"] is None

    def test_read_restores_categories_and_provenance(self, tmp_path, parcels, crs):
        path = write_parcels(tmp_path / "parcels.geojson", parcels, crs)

        read = {p.id: p for p in read_parcels(path)}

        assert read["p0002"].categories == parcels[0].categories
        assert read["p0002"].provenance == parcels[0].provenance
        assert read["p0002"].evidence == {2019: "raster VacantLand 91%"}
        assert read["p0001"].pending_years == [2019]
        assert read["p0002"].area == pytest.approx(10000)


class TestWriteParcelsCsv:
    def test_one_column_pair_per_year(self, tmp_path, parcels):
        path = write_parcels_csv(tmp_path / "parcels.csv", parcels, [2015, 2019])

        frame = pd.read_csv(path)

        assert list(frame["id"]) == ["p0001", "p0002"]
        assert list(frame.columns[-4:]) == [
            "category_2015",
            "method_2015",
            "category_2019",
            "method_2019",
        ]
        assert frame.loc[1, "method_2019"] == "raster-classifier"
