import pydantic
import pytest

from uvlife.schema.models.run_config import RunConfig, YearInputs


@pytest.fixture
def inputs(tmp_path):
    snapshot = tmp_path / "uv.geojson"
    snapshot.touch()
    return {
        "city": "Wuhan",
        "crs": "EPSG:32650",
        "timeline": [2015, 2019],
        "years": {2015: {"snapshot": snapshot}, 2019: {"snapshot": snapshot}},
    }


class TestYearInputs:
    def test_needs_an_extent(self):
        with pytest.raises(pydantic.ValidationError, match="exactly one of"):
            YearInputs()

    def test_not_both(self, tmp_path):
        with pytest.raises(pydantic.ValidationError, match="exactly one of"):
            YearInputs(snapshot=tmp_path, mask=tmp_path)


class TestRunConfig:
    def test_valid(self, inputs):
        config = RunConfig.model_validate(inputs)

        assert config.projected_crs.epsg_code == 32650
        assert list(config.observation_timeline) == [2015, 2019]

    def test_geographic_crs_is_rejected(self, inputs):
        with pytest.raises(pydantic.ValidationError):
            RunConfig.model_validate({**inputs, "crs": "EPSG:4326"})

    def test_timeline_must_increase(self, inputs):
        with pytest.raises(pydantic.ValidationError, match="strictly increasing"):
            RunConfig.model_validate({**inputs, "timeline": [2019, 2015]})

    def test_one_entry_per_year(self, inputs):
        with pytest.raises(pydantic.ValidationError, match="one entry per timeline"):
            RunConfig.model_validate({**inputs, "timeline": [2015, 2019, 2023]})

    def test_unknown_keys(self, inputs):
        with pytest.raises(pydantic.ValidationError, match="Extra inputs"):
            RunConfig.model_validate({**inputs, "town": "Wuhan"})
