from typing import Any

import pytest

from uvlife.exception import UvlUserError
from uvlife.schema.override_dictionary import (
    apply_overrides_to_dictionary,
    update_value_by_location,
)


class TestUpdateValueByLocation:
    @pytest.mark.parametrize(
        ("initial_dict", "key", "value", "expected"),
        [
            ({"city": "Wuhan"}, "city", "Xi'an", {"city": "Xi'an"}),
            ({"seed": 0}, "seed", "7", {"seed": "7"}),
            ({}, "city", "Wuhan", {"city": "Wuhan"}),
        ],
    )
    def test_simple_dictionary_updates(self, initial_dict, key, value, expected):
        result = update_value_by_location(initial_dict, key, value, key)
        assert result == expected

    @pytest.mark.parametrize(
        ("initial_dict", "key", "value", "expected"),
        [
            (
                {"parameters": {"delta": 0.3}},
                "parameters.delta",
                "0.4",
                {"parameters": {"delta": "0.4"}},
            ),
            (
                {"spawn": {"rules": {"noise_pois": 0}}},
                "spawn.rules.noise_pois",
                "5",
                {"spawn": {"rules": {"noise_pois": "5"}}},
            ),
            ({}, "parameters.jobs", "4", {"parameters": {"jobs": "4"}}),
        ],
    )
    def test_nested_dictionary_updates(self, initial_dict, key, value, expected):
        result = update_value_by_location(initial_dict, key, value, key)
        assert result == expected

    def test_year_keys_match_integers(self):
        data = {"years": {2019: {"pois": "a.csv"}}}

        result = update_value_by_location(
            data, "years.2019.pois", "b.csv", "years.2019.pois"
        )

        assert result == {"years": {2019: {"pois": "b.csv"}}}

    @pytest.mark.parametrize(
        ("initial_list", "key", "value", "expected"),
        [
            ([2015, 2019, 2023], "0", "2014", ["2014", 2019, 2023]),
            ([2015, 2019, 2023], "2", "2024", [2015, 2019, "2024"]),
        ],
    )
    def test_list_updates(self, initial_list, key, value, expected):
        result = update_value_by_location(
            initial_list, key, value, f"timeline.{key}"
        )
        assert result == expected

    @pytest.mark.parametrize(
        ("initial_dict", "key", "value", "expected"),
        [
            (
                {"timeline": [2015, 2019]},
                "timeline.1",
                "2020",
                {"timeline": [2015, "2020"]},
            ),
            (
                {"parcels": [{"remaining": 0.5}, {"remaining": 0.4}]},
                "parcels.1.remaining",
                "0.6",
                {"parcels": [{"remaining": 0.5}, {"remaining": "0.6"}]},
            ),
        ],
    )
    def test_mixed_dict_list_traversal(self, initial_dict, key, value, expected):
        result = update_value_by_location(initial_dict, key, value, key)
        assert result == expected

    @pytest.mark.parametrize(
        ("initial_dict", "key"),
        [
            ({"timeline": [2015, 2019]}, "timeline.first"),
            ({"parcels": [{}]}, "parcels.x.remaining"),
        ],
    )
    def test_non_integer_index_for_list_raises_error(self, initial_dict, key):
        with pytest.raises(
            UvlUserError, match=r"corresponds to a list, but .* is not an integer"
        ):
            update_value_by_location(initial_dict, key, "value", key)

    def test_index_out_of_range_raises_error(self):
        with pytest.raises(UvlUserError, match=r"Index 5 is out of range"):
            update_value_by_location(
                {"timeline": [2015]}, "timeline.5", "2020", "timeline.5"
            )

    def test_plain_value_raises_error(self):
        with pytest.raises(UvlUserError, match="is a plain value"):
            update_value_by_location({"city": "Wuhan"}, "city.name", "x", "city.name")

    def test_mutates_original_structure(self):
        original = {"city": "Wuhan"}
        result = update_value_by_location(original, "city", "Hefei", "city")
        assert result is original
        assert original == {"city": "Hefei"}


class TestApplyOverridesToDictionary:
    def test_multiple_overrides(self):
        initial: dict[str, Any] = {
            "city": "Wuhan",
            "parameters": {"delta": 0.3, "jobs": 1},
            "years": {2015: {"snapshot": "a.geojson"}},
        }
        overrides = {
            "parameters.delta": "0.4",
            "parameters.jobs": "8",
            "years.2015.snapshot": "b.geojson",
        }

        result = apply_overrides_to_dictionary(initial, overrides)

        assert result["parameters"] == {"delta": "0.4", "jobs": "8"}
        assert result["years"][2015]["snapshot"] == "b.geojson"
        assert result["city"] == "Wuhan"

    def test_does_not_mutate_original(self):
        original = {"parameters": {"delta": 0.3}}

        result = apply_overrides_to_dictionary(original, {"parameters.delta": "0.5"})

        assert original == {"parameters": {"delta": 0.3}}
        assert result == {"parameters": {"delta": "0.5"}}

    def test_empty_overrides(self):
        original = {"city": "Wuhan"}
        result = apply_overrides_to_dictionary(original, {})
        assert result == original
        assert result is not original
