import pydantic

from uvlife.exception import UvlUserError
from uvlife.geo.grid import AffineGrid
from uvlife.schema.models.base import FrozenModel

DEFAULT_TILE_SIZE = 1024
DEFAULT_STRIDE = 512


class TileWindow(FrozenModel):
    col_off: int = pydantic.Field(ge=0)
    row_off: int = pydantic.Field(ge=0)
    width: int = pydantic.Field(ge=1)
    height: int = pydantic.Field(ge=1)

    @property
    def slices(self) -> tuple[slice, slice]:
        """Row and column slices selecting this window from a full-grid array."""
        return (
            slice(self.row_off, self.row_off + self.height),
            slice(self.col_off, self.col_off + self.width),
        )


class TilePlan(FrozenModel):
    grid: AffineGrid
    tile_size: int = pydantic.Field(default=DEFAULT_TILE_SIZE, gt=0)
    stride: int = pydantic.Field(default=DEFAULT_STRIDE, gt=0)
    windows: tuple[TileWindow, ...]

    @pydantic.model_validator(mode="after")
    def check_windows(self) -> "TilePlan":
        keys = [(w.row_off, w.col_off) for w in self.windows]
        if keys != sorted(set(keys)):
            message = "Tile windows must be unique and sorted row-major."
            raise ValueError(message)
        for index, window in enumerate(self.windows):
            if (
                window.col_off + window.width > self.grid.width
                or window.row_off + window.height > self.grid.height
            ):
                message = f"Tile window {index} extends beyond the grid."
                raise ValueError(message)
        return self


def axis_offsets(dimension: int, tile_size: int, stride: int) -> list[int]:
    """Window offsets along one axis: multiples of `stride`, then `dimension - tile`.

    The last window is shifted back so it ends exactly on the border; axes
    shorter than a tile get a single offset 0.
    """
    if dimension <= tile_size:
        return [0]
    offsets = list(range(0, dimension - tile_size + 1, stride))
    if offsets[-1] != dimension - tile_size:
        offsets.append(dimension - tile_size)
    return offsets


def plan_tiles(
    grid: AffineGrid,
    tile_size: int = DEFAULT_TILE_SIZE,
    stride: int = DEFAULT_STRIDE,
) -> TilePlan:
    """Plan sliding windows of `tile_size` pixels advancing by `stride`.

    Example:
        ```py
        grid = AffineGrid(
            origin_x=0, origin_y=0, pixel_size=0.5, width=1500, height=1024
        )
        [w.col_off for w in plan_tiles(grid).windows]  # [0, 476]
        ```

    Args:
        grid: Grid to cover.
        tile_size: Window edge in pixels.
        stride: Step between window offsets in pixels; at most `tile_size` so that
            no pixel is skipped.

    Returns:
        The plan with windows sorted row-major.
    """
    if tile_size <= 0 or stride <= 0:
        message = (
            f"Tile size and stride must be positive (got tile {tile_size}, stride"
            f" {stride})."
        )
        raise UvlUserError(message)
    if stride > tile_size:
        message = (
            f"Stride {stride} is larger than the tile size {tile_size}; pixels"
            " between windows would be left uncovered."
        )
        raise UvlUserError(message)

    width = min(tile_size, grid.width)
    height = min(tile_size, grid.height)
    windows = tuple(
        TileWindow(col_off=col_off, row_off=row_off, width=width, height=height)
        for row_off in axis_offsets(grid.height, tile_size, stride)
        for col_off in axis_offsets(grid.width, tile_size, stride)
    )
    return TilePlan(grid=grid, tile_size=tile_size, stride=stride, windows=windows)
