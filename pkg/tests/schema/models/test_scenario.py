import pydantic
import pytest

from uvlife.lifecycle.categories import LandUseCategory
from uvlife.schema.models.scenario import ParcelScript, ScenarioScript


class TestParcelScript:
    def test_legal_sequence(self):
        script = ParcelScript(sequence=["UrbanVillage", "VacantLand", "Buildings"])

        assert script.sequence[-1] is LandUseCategory.Buildings

    @pytest.mark.parametrize(
        ("sequence", "rule"),
        [
            (["Buildings", "Buildings"], "starts-as-urban-village"),
            (["UrbanVillage", "VacantLand", "UrbanVillage"], "no-urban-village-return"),
            (
                ["UrbanVillage", "VacantLand", "IncompleteDemolition"],
                "incomplete-follows-village",
            ),
        ],
    )
    def test_illegal_sequences_name_the_rule(self, sequence, rule):
        with pytest.raises(pydantic.ValidationError, match=rule):
            ParcelScript(sequence=sequence)

    def test_remaining_share_must_be_visible(self):
        with pytest.raises(pydantic.ValidationError):
            ParcelScript(
                sequence=["UrbanVillage", "IncompleteDemolition"], remaining=0.8
            )


class TestScenarioScript:
    def test_defaults(self):
        script = ScenarioScript()

        assert script.timeline == [2015, 2019, 2023]
        assert script.crs == "EPSG:32650"
        assert script.parcels == []

    def test_sequence_length_follows_the_timeline(self):
        with pytest.raises(pydantic.ValidationError, match="2 categories for 3"):
            ScenarioScript.model_validate(
                {"parcels": [{"sequence": ["UrbanVillage", "VacantLand"]}]}
            )
