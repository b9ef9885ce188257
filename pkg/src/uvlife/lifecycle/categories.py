import enum


class LandUseCategory(str, enum.Enum):
    """The seven parcel categories, in raster-code order (code 0 means no data)."""

    UrbanVillage = "UrbanVillage"
    IncompleteDemolition = "IncompleteDemolition"
    VacantLand = "VacantLand"
    ConstructionSite = "ConstructionSite"
    Buildings = "Buildings"
    GreenSpaces = "GreenSpaces"
    Others = "Others"

    @property
    def code(self) -> int:
        return list(LandUseCategory).index(self) + 1

    @classmethod
    def from_code(cls, code: int) -> "LandUseCategory":
        return list(cls)[code - 1]

    @property
    def is_transitional(self) -> bool:
        return self in TRANSITIONAL_CATEGORIES

    @property
    def is_stable(self) -> bool:
        return self in STABLE_CATEGORIES


DEMOLISHED_CATEGORIES = (
    LandUseCategory.IncompleteDemolition,
    LandUseCategory.VacantLand,
    LandUseCategory.ConstructionSite,
)
TRANSITIONAL_CATEGORIES = (LandUseCategory.VacantLand, LandUseCategory.ConstructionSite)
STABLE_CATEGORIES = (
    LandUseCategory.Buildings,
    LandUseCategory.GreenSpaces,
    LandUseCategory.Others,
)

LEGEND: dict[int, str] = {category.code: category.value for category in LandUseCategory}


class PhaseLabel(str, enum.Enum):
    Remained = "Remained"
    Demolished = "Demolished"
    Redeveloped = "Redeveloped"


class AssignmentMethod(str, enum.Enum):
    """Provenance tag stored for every parcel-year label."""

    boundary_diff = "boundary-diff"
    raster_classifier = "raster-classifier"
    poi_osm = "poi-osm"
    manual = "manual"


class Pathway(str, enum.Enum):
    """How a demolished parcel moved towards its final use."""

    gradual = "gradual"
    delayed = "delayed"
    synchronized = "synchronized"
