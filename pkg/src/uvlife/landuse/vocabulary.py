import functools
import pathlib
from typing import Any, Literal

import pydantic

from uvlife.lifecycle.categories import LandUseCategory
from uvlife.schema.models.base import BaseModelWithoutExtraKeys
from uvlife.schema.pydantic_error_handling import validate_with_friendly_errors
from uvlife.schema.yaml_reader import read_yaml

type PoiCategory = Literal[
    "residential",
    "commercial",
    "office",
    "education",
    "medical",
    "transport",
    "park",
    "other",
]
type OsmClass = Literal[
    "building", "green", "road", "plaza", "public_facility", "parking", "other"
]

POI_CATEGORIES: tuple[str, ...] = PoiCategory.__value__.__args__
OSM_CLASSES: tuple[str, ...] = OsmClass.__value__.__args__

DEFAULT_TAG_MAPPING_PATH = pathlib.Path(__file__).parent / "tag_mapping.yaml"


class OsmRule(BaseModelWithoutExtraKeys):
    model_config = pydantic.ConfigDict(populate_by_name=True)

    key: str
    value: str = "*"
    tag_class: OsmClass = pydantic.Field(alias="class")

    def matches(self, tags: dict[str, Any]) -> bool:
        if self.key not in tags:
            return False
        return self.value == "*" or str(tags[self.key]) == self.value


class TagMapping(BaseModelWithoutExtraKeys):
    """Documented tables turning raw OSM tags and POI types into categories.

    The defaults ship in `tag_mapping.yaml`; a run may point at its own file.
    """

    osm_rules: list[OsmRule]
    osm_classes: dict[OsmClass, LandUseCategory]
    line_widths: dict[OsmClass, pydantic.PositiveFloat]
    poi_categories: dict[PoiCategory, LandUseCategory]

    def classify_tags(self, tags: dict[str, Any]) -> OsmClass:
        for rule in self.osm_rules:
            if rule.matches(tags):
                return rule.tag_class
        return "other"

    def line_width(self, tag_class: OsmClass) -> float:
        return self.line_widths.get(tag_class, self.line_widths.get("other", 2.0))

    def with_road_width(self, road_width: float) -> "TagMapping":
        return self.model_copy(
            update={"line_widths": {**self.line_widths, "road": road_width}}
        )


@functools.cache
def default_tag_mapping() -> TagMapping:
    return read_tag_mapping(DEFAULT_TAG_MAPPING_PATH)


def read_tag_mapping(path: pathlib.Path) -> TagMapping:
    return validate_with_friendly_errors(TagMapping, read_yaml(path))
