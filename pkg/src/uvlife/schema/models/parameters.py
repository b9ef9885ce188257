import pydantic

from uvlife.landuse.assignment import DEFAULT_OSM_COVERAGE_GATE
from uvlife.landuse.mixed import DEFAULT_MIXED_USE_THRESHOLD
from uvlife.postproc.morphology import ElementShape
from uvlife.tiler.plan import DEFAULT_STRIDE, DEFAULT_TILE_SIZE
from uvlife.tiler.stitch import BlendMode

from .base import BaseModelWithoutExtraKeys


class Parameters(BaseModelWithoutExtraKeys):
    """Every tunable of a run. All of them are written to the run manifest."""

    tile_size: int = pydantic.Field(
        default=DEFAULT_TILE_SIZE,
        gt=0,
        description="Tile edge in pixels. The default value is `1024`.",
    )
    stride: int = pydantic.Field(
        default=DEFAULT_STRIDE,
        gt=0,
        description=(
            "Distance between tile origins in pixels, at most `tile_size`. The"
            " default value is `512`."
        ),
    )
    stitch_blend: BlendMode = pydantic.Field(
        default=BlendMode.mean,
        description="How overlapping tile probabilities are merged.",
    )
    structuring_element: ElementShape = pydantic.Field(
        default=ElementShape.square,
        description="Shape of the morphology kernel. The default value is `square`.",
    )
    close_radius: int = pydantic.Field(default=2, ge=1)
    open_radius: int = pydantic.Field(default=2, ge=1)
    min_area: float = pydantic.Field(
        default=400.0,
        ge=0,
        description=(
            "Components smaller than this many square metres are dropped after"
            " morphology. The default value is `400`."
        ),
    )
    binarize: bool = pydantic.Field(
        default=False,
        description="Treat every non-zero mask value as urban village.",
    )
    iou_threshold: float = pydantic.Field(
        default=0.9,
        gt=0,
        le=1,
        description=(
            "Later components overlapping an earliest-year component at least this"
            " much take over its geometry. The default value is `0.9`."
        ),
    )
    delta: float = pydantic.Field(
        default=0.3,
        gt=0,
        lt=1,
        description=(
            "A parcel keeping at most `1 - delta` of its area is an incomplete"
            " demolition. The default value is `0.3`."
        ),
    )
    osm_coverage_gate: float = pydantic.Field(
        default=DEFAULT_OSM_COVERAGE_GATE, ge=0, le=1
    )
    road_width: float = pydantic.Field(
        default=6.0,
        gt=0,
        description="Buffer width of OSM road lines in metres.",
    )
    mixed_use_split: bool = False
    mixed_use_threshold: float = pydantic.Field(
        default=DEFAULT_MIXED_USE_THRESHOLD, gt=0, lt=1
    )
    block_size: float = pydantic.Field(default=2000.0, gt=0)
    val_fraction: float = pydantic.Field(default=0.2, gt=0, lt=1)
    buffer_radius: float = pydantic.Field(default=500.0, ge=0)
    seed: int = 42
    jobs: int = pydantic.Field(
        default=1,
        ge=1,
        description="Upper bound on worker threads inside a stage.",
    )

    @pydantic.model_validator(mode="after")
    def check_stride(self) -> "Parameters":
        if self.stride > self.tile_size:
            message = (
                f"The stride ({self.stride}) cannot exceed the tile size"
                f" ({self.tile_size})."
            )
            raise ValueError(message)
        return self
