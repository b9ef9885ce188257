import pytest

from uvlife.lifecycle.categories import AssignmentMethod, LandUseCategory
from uvlife.lifecycle.parcels import LifecycleParcel

UV = LandUseCategory.UrbanVillage
YEARS = (2015, 2019, 2023)


@pytest.fixture
def parcels(boxes) -> list[LifecycleParcel]:
    """Four parcels along the x axis, one per lifecycle story.

    p0001 remains, p0002 is gradually rebuilt, p0003 stays vacant and p0004 is
    turned into green space in one go.
    """
    stories = [
        ((0, 0, 100, 100), (UV, UV, UV)),
        ((100, 0, 200, 100), (UV, "IncompleteDemolition", "Buildings")),
        ((200, 0, 300, 100), (UV, "VacantLand", "VacantLand")),
        ((300, 0, 350, 100), (UV, "ConstructionSite", "GreenSpaces")),
    ]
    result = []
    for index, (bounds, sequence) in enumerate(stories):
        categories = [LandUseCategory(value) for value in sequence]
        result.append(
            LifecycleParcel(
                id=f"p{index + 1:04d}",
                geometry=boxes(bounds),
                categories=dict(zip(YEARS, categories, strict=True)),
                provenance=dict.fromkeys(YEARS, AssignmentMethod.manual),
            )
        )
    return result
