import json
from typing import Any

import pytest
import shapely

from uvlife.exception import UvlUserError
from uvlife.landuse.evidence import (
    OsmFeature,
    PoiPoint,
    osm_feature_from_geometry,
    read_osm,
    read_pois,
)
from uvlife.landuse.vocabulary import default_tag_mapping


def feature_collection(path, features):
    data = {
        "type": "FeatureCollection",
        "crs": {"type": "name", "properties": {"name": "EPSG:32650"}},
        "features": [
            {"type": "Feature", "properties": properties, "geometry": geometry}
            for geometry, properties in features
        ],
    }
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


SQUARE = {
    "type": "Polygon",
    "coordinates": [[[0, 0], [10, 0], [10, 10], [0, 10], [0, 0]]],
}
STREET = {"type": "LineString", "coordinates": [[0, 0], [10, 0]]}
KIOSK = {"type": "Point", "coordinates": [5, 5]}


class TestPoiPoint:
    def test_rejects_non_finite_coordinates(self):
        with pytest.raises(UvlUserError, match="finite"):
            PoiPoint(float("nan"), 0.0, "office")

    def test_rejects_unknown_category(self):
        with pytest.raises(UvlUserError, match="Unknown POI category `bar`"):
            category: Any = "bar"
            PoiPoint(0.0, 0.0, category)


class TestReadPois:
    def test_reads_csv(self, tmp_path):
        path = tmp_path / "pois.csv"
        path.write_text("x,y,category\n1,2,office\n3.5, 4, park\n", encoding="utf-8")

        assert read_pois(path) == [
            PoiPoint(1.0, 2.0, "office"),
            PoiPoint(3.5, 4.0, "park"),
        ]

    def test_empty_csv_has_no_pois(self, tmp_path):
        path = tmp_path / "pois.csv"
        path.write_text("", encoding="utf-8")

        assert read_pois(path) == []

    def test_missing_columns(self, tmp_path):
        path = tmp_path / "pois.csv"
        path.write_text("x,y\n1,2\n", encoding="utf-8")

        with pytest.raises(UvlUserError, match="lacks the POI columns"):
            read_pois(path)

    def test_unknown_categories(self, tmp_path):
        path = tmp_path / "pois.csv"
        path.write_text("x,y,category\n1,2,nightclub\n", encoding="utf-8")

        with pytest.raises(UvlUserError, match="nightclub"):
            read_pois(path)

    def test_reads_geojson_points(self, tmp_path):
        path = feature_collection(
            tmp_path / "pois.geojson", [(KIOSK, {"category": "commercial"})]
        )

        assert read_pois(path) == [PoiPoint(5.0, 5.0, "commercial")]

    def test_geojson_polygons_are_rejected(self, tmp_path):
        path = feature_collection(tmp_path / "pois.geojson", [(SQUARE, {})])

        with pytest.raises(UvlUserError, match="feature 0 is not a point"):
            read_pois(path)


class TestReadOsm:
    def test_classifies_raw_tags(self, tmp_path):
        path = feature_collection(
            tmp_path / "osm.geojson",
            [
                (SQUARE, {"building": "yes"}),
                (STREET, {"tags": {"highway": "primary"}}),
                (SQUARE, {"tag_class": "green"}),
            ],
        )

        features = read_osm(path)

        assert [f.tag_class for f in features] == ["building", "road", "green"]
        assert features[0].geometry.area == pytest.approx(100)

    def test_roads_are_buffered_with_flat_caps(self, tmp_path):
        path = feature_collection(
            tmp_path / "osm.geojson", [(STREET, {"highway": "primary"})]
        )

        (road,) = read_osm(path)

        assert road.geometry.area == pytest.approx(60)
        assert road.geometry.bounds == pytest.approx((0, -3, 10, 3))

    def test_custom_road_width(self, tmp_path):
        path = feature_collection(
            tmp_path / "osm.geojson", [(STREET, {"highway": "primary"})]
        )

        (road,) = read_osm(path, mapping=default_tag_mapping().with_road_width(10))

        assert road.geometry.area == pytest.approx(100)

    def test_points_are_skipped(self, tmp_path):
        path = feature_collection(
            tmp_path / "osm.geojson", [(KIOSK, {"amenity": "parking"})]
        )

        assert read_osm(path) == []


class TestOsmFeature:
    def test_unknown_class(self, boxes):
        with pytest.raises(UvlUserError, match="Unknown OSM class"):
            tag_class: Any = "tower"
            OsmFeature(boxes((0, 0, 1, 1)), tag_class)

    def test_point_geometry_gives_nothing(self, crs):
        feature = osm_feature_from_geometry(
            shapely.Point(0, 0), "building", crs, default_tag_mapping(), "kiosk"
        )

        assert feature is None
