import pytest

from uvlife.schema.models.scenario import ScenarioScript
from uvlife.synth.scenario import ScenarioBundle, generate_scenario


@pytest.fixture
def city(tmp_path) -> ScenarioBundle:
    """A small synthetic city covering every lifecycle phase."""
    script = ScenarioScript(
        parcels=[
            {"sequence": ["UrbanVillage", "UrbanVillage", "UrbanVillage"]},
            {"sequence": ["UrbanVillage", "IncompleteDemolition", "Buildings"]},
            {"sequence": ["UrbanVillage", "VacantLand", "ConstructionSite"]},
            {"sequence": ["UrbanVillage", "GreenSpaces", "GreenSpaces"]},
        ]
    )
    return generate_scenario(script, tmp_path / "city")
