from typing import Literal, Self

import pydantic

from uvlife.exception import InconsistentSequenceError
from uvlife.geo.crs import ProjectedCrs
from uvlife.lifecycle.categories import LandUseCategory
from uvlife.lifecycle.phases import check_sequence
from uvlife.lifecycle.timeline import Timeline

from .base import BaseModelWithoutExtraKeys


class ParcelScript(BaseModelWithoutExtraKeys):
    """One scripted parcel: its category in every timeline year."""

    sequence: list[LandUseCategory] = pydantic.Field(min_length=2)
    remaining: float = pydantic.Field(
        default=0.5,
        gt=0,
        le=0.7,
        description=(
            "Share of the parcel still detected while it is an incomplete"
            " demolition; at most 0.7 so that the default `delta` of 0.3 sees it."
        ),
    )

    @pydantic.field_validator("sequence")
    @classmethod
    def check_legal(cls, value: list[LandUseCategory]) -> list[LandUseCategory]:
        try:
            check_sequence(value)
        except InconsistentSequenceError as e:
            message = f"{e.message} Violated rule: `{e.rule}`."
            raise ValueError(message) from e
        return value


class SpawnRules(BaseModelWithoutExtraKeys):
    """How evidence is planted for parcels in each category."""

    pois_per_parcel: int = pydantic.Field(default=3, ge=0)
    osm_for_stable: bool = pydantic.Field(
        default=True,
        description="Cover stable parcels with a matching OSM footprint.",
    )
    noise_pois: int = pydantic.Field(
        default=0,
        ge=0,
        description="Unmapped `other` POIs scattered over the whole scene.",
    )


class ScenarioScript(BaseModelWithoutExtraKeys):
    seed: int = 0
    city: str = "Synthetic City"
    crs: str = "EPSG:32650"
    timeline: list[int] = pydantic.Field(default_factory=lambda: [2015, 2019, 2023])
    origin: tuple[float, float] = (500000.0, 2500000.0)
    parcel_size: float = pydantic.Field(default=100.0, gt=0)
    gap: float = pydantic.Field(default=40.0, gt=0)
    columns: int = pydantic.Field(default=10, ge=1)
    pixel_size: float = pydantic.Field(default=1.0, gt=0)
    jitter: float = pydantic.Field(
        default=0.0,
        ge=0,
        description=(
            "Later-year urban-village parcels are shifted east by this many metres"
            " to exercise temporal alignment."
        ),
    )
    parcels: list[ParcelScript] = pydantic.Field(default_factory=list)
    random_parcels: int = pydantic.Field(
        default=0,
        ge=0,
        description="Extra parcels with legal sequences drawn from the seed.",
    )
    zone_count: int = pydantic.Field(default=2, ge=0)
    extent_source: Literal["snapshot", "mask"] = "snapshot"
    spawn: SpawnRules = pydantic.Field(default_factory=SpawnRules)

    @pydantic.field_validator("crs")
    @classmethod
    def check_crs(cls, value: str) -> str:
        return str(ProjectedCrs.from_user_input(value))

    @pydantic.field_validator("timeline")
    @classmethod
    def check_timeline(cls, value: list[int]) -> list[int]:
        return list(Timeline(tuple(value)).years)

    @pydantic.model_validator(mode="after")
    def check_sequence_lengths(self) -> Self:
        for index, parcel in enumerate(self.parcels):
            if len(parcel.sequence) != len(self.timeline):
                message = (
                    f"Parcel {index} has {len(parcel.sequence)} categories for"
                    f" {len(self.timeline)} timeline years."
                )
                raise ValueError(message)
        return self
