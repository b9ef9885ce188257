import pathlib
from typing import Self

import pydantic

from uvlife.geo.crs import ProjectedCrs
from uvlife.lifecycle.timeline import Timeline

from .base import BaseModelWithoutExtraKeys
from .parameters import Parameters
from .path import ExistingPathRelativeToInput, PlannedPathRelativeToInput


class YearInputs(BaseModelWithoutExtraKeys):
    """Inputs of one observation year; exactly one of `snapshot` and `mask`."""

    snapshot: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="GeoJSON with the detected urban-village extent of the year.",
    )
    mask: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="Stitched 8-bit GeoTIFF mask, cleaned by morphology first.",
    )
    pois: ExistingPathRelativeToInput | None = None
    osm: ExistingPathRelativeToInput | None = None
    category_raster: ExistingPathRelativeToInput | None = None
    imagery: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="Single-band luminance GeoTIFF for the transitional classifier.",
    )
    transitional_labels: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="CSV with `parcel_id,category,confidence` rows.",
    )

    @pydantic.model_validator(mode="after")
    def check_extent_source(self) -> Self:
        if (self.snapshot is None) == (self.mask is None):
            message = "Give exactly one of `snapshot` and `mask`."
            raise ValueError(message)
        return self


class RunConfig(BaseModelWithoutExtraKeys):
    city: str = pydantic.Field(min_length=1)
    crs: str = pydantic.Field(
        description=(
            "Projected, metre-based CRS shared by every input, like `EPSG:32650`."
        )
    )
    timeline: list[int] = pydantic.Field(
        description=(
            "Observation years in increasing order, like `[2015, 2019, 2023]`."
        )
    )
    years: dict[int, YearInputs]
    zones: ExistingPathRelativeToInput | None = None
    manual_labels: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="CSV with `parcel_id,year,category` rows; these always win.",
    )
    alignment_overrides: ExistingPathRelativeToInput | None = pydantic.Field(
        default=None,
        description="GeoJSON edits with `year` and `action` applied after alignment.",
    )
    tag_mapping: ExistingPathRelativeToInput | None = None
    parameters: Parameters = pydantic.Field(default_factory=Parameters)
    output_dir: PlannedPathRelativeToInput = pydantic.Field(
        default=pathlib.Path("uvl_output")
    )

    @pydantic.field_validator("crs")
    @classmethod
    def check_crs(cls, value: str) -> str:
        return str(ProjectedCrs.from_user_input(value))

    @pydantic.field_validator("timeline")
    @classmethod
    def check_timeline(cls, value: list[int]) -> list[int]:
        return list(Timeline(tuple(value)).years)

    @pydantic.model_validator(mode="after")
    def check_years(self) -> Self:
        if sorted(self.years) != self.timeline:
            message = (
                f"`years` must have exactly one entry per timeline year"
                f" {self.timeline}; got {sorted(self.years)}."
            )
            raise ValueError(message)
        return self

    @property
    def projected_crs(self) -> ProjectedCrs:
        return ProjectedCrs.from_user_input(self.crs)

    @property
    def observation_timeline(self) -> Timeline:
        return Timeline(tuple(self.timeline))
