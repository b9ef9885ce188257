from dataclasses import dataclass, field

import numpy as np
import pydantic
from rasterio.transform import Affine

from uvlife.exception import UvlUserError
from uvlife.schema.models.base import FrozenModel

NO_DATA = 0


class AffineGrid(FrozenModel):
    """North-up grid of square cells; `origin_x/origin_y` is the top-left corner."""

    origin_x: float
    origin_y: float
    pixel_size: float = pydantic.Field(gt=0)
    width: int = pydantic.Field(ge=1)
    height: int = pydantic.Field(ge=1)

    @property
    def transform(self) -> Affine:
        return Affine(
            self.pixel_size, 0.0, self.origin_x, 0.0, -self.pixel_size, self.origin_y
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    @property
    def bounds(self) -> tuple[float, float, float, float]:
        return (
            self.origin_x,
            self.origin_y - self.height * self.pixel_size,
            self.origin_x + self.width * self.pixel_size,
            self.origin_y,
        )

    @property
    def cell_area(self) -> float:
        return self.pixel_size * self.pixel_size

    def cell_center(self, col: int, row: int) -> tuple[float, float]:
        return (
            self.origin_x + (col + 0.5) * self.pixel_size,
            self.origin_y - (row + 0.5) * self.pixel_size,
        )

    def cell_of(self, x: float, y: float) -> tuple[int, int]:
        """Column and row of the cell containing world point (x, y)."""
        col = int(np.floor((x - self.origin_x) / self.pixel_size))
        row = int(np.floor((self.origin_y - y) / self.pixel_size))
        return col, row

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """World coordinates of every cell center as two (height, width) arrays."""
        cols = self.origin_x + (np.arange(self.width) + 0.5) * self.pixel_size
        rows = self.origin_y - (np.arange(self.height) + 0.5) * self.pixel_size
        return np.meshgrid(cols, rows)

    def window(
        self, col_off: int, row_off: int, width: int, height: int
    ) -> "AffineGrid":
        return AffineGrid(
            origin_x=self.origin_x + col_off * self.pixel_size,
            origin_y=self.origin_y - row_off * self.pixel_size,
            pixel_size=self.pixel_size,
            width=width,
            height=height,
        )

    def clip(self, bounds: tuple[float, float, float, float]) -> "AffineGrid | None":
        """Sub-grid of whole cells overlapping `bounds`, or None outside the grid."""
        minx, miny, maxx, maxy = bounds
        col_start = max(0, int(np.floor((minx - self.origin_x) / self.pixel_size)))
        col_stop = min(
            self.width, int(np.ceil((maxx - self.origin_x) / self.pixel_size))
        )
        row_start = max(0, int(np.floor((self.origin_y - maxy) / self.pixel_size)))
        row_stop = min(
            self.height, int(np.ceil((self.origin_y - miny) / self.pixel_size))
        )
        if col_stop <= col_start or row_stop <= row_start:
            return None
        return self.window(
            col_start, row_start, col_stop - col_start, row_stop - row_start
        )

    def offset_in(self, parent: "AffineGrid") -> tuple[slice, slice]:
        """Row and column slices of this sub-grid inside `parent`."""
        col = round((self.origin_x - parent.origin_x) / parent.pixel_size)
        row = round((parent.origin_y - self.origin_y) / parent.pixel_size)
        return slice(row, row + self.height), slice(col, col + self.width)

    @classmethod
    def covering(
        cls,
        bounds: tuple[float, float, float, float],
        pixel_size: float,
    ) -> "AffineGrid":
        """Smallest grid with corners on multiples of `pixel_size` covering `bounds`.

        Snapping the corners to the pixel lattice makes the grid, and therefore
        every cell-center decision, invariant to where the bounds came from.
        """
        minx, miny, maxx, maxy = bounds
        left = np.floor(minx / pixel_size) * pixel_size
        top = np.ceil(maxy / pixel_size) * pixel_size
        right = np.ceil(maxx / pixel_size) * pixel_size
        bottom = np.floor(miny / pixel_size) * pixel_size
        return cls(
            origin_x=float(left),
            origin_y=float(top),
            pixel_size=pixel_size,
            width=max(1, round((right - left) / pixel_size)),
            height=max(1, round((top - bottom) / pixel_size)),
        )

    @classmethod
    def from_transform(
        cls, transform: Affine, width: int, height: int
    ) -> "AffineGrid":
        if (
            transform.b != 0
            or transform.d != 0
            or transform.e >= 0
            or not np.isclose(transform.a, -transform.e)
        ):
            message = (
                "Only north-up rasters with square pixels are supported; got the"
                f" transform {tuple(transform)[:6]}."
            )
            raise UvlUserError(message)
        return cls(
            origin_x=transform.c,
            origin_y=transform.f,
            pixel_size=transform.a,
            width=width,
            height=height,
        )


def _frozen_copy(array: np.ndarray, dtype: type) -> np.ndarray:
    copied = np.array(array, dtype=dtype, copy=True)
    copied.flags.writeable = False
    return copied


@dataclass(frozen=True, eq=False)
class BinaryMask:
    grid: AffineGrid
    bits: np.ndarray

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits)
        if bits.shape != self.grid.shape:
            message = (
                f"Mask has shape {bits.shape} but its grid is"
                f" {self.grid.height}x{self.grid.width}."
            )
            raise UvlUserError(message)
        if bits.size and not np.isin(bits, (0, 1)).all():
            message = "Mask values must be exactly 0 or 1."
            raise UvlUserError(message)
        object.__setattr__(self, "bits", _frozen_copy(bits, np.uint8))

    @classmethod
    def zeros(cls, grid: AffineGrid) -> "BinaryMask":
        return cls(grid, np.zeros(grid.shape, dtype=np.uint8))

    @property
    def count(self) -> int:
        return int(self.bits.sum(dtype=np.int64))

    def equals(self, other: "BinaryMask") -> bool:
        return self.grid == other.grid and np.array_equal(self.bits, other.bits)


@dataclass(frozen=True, eq=False)
class CategoryRaster:
    """Label grid with a legend; code 0 is reserved for "no data"."""

    grid: AffineGrid
    labels: np.ndarray
    legend: dict[int, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        labels = np.asarray(self.labels)
        if labels.shape != self.grid.shape:
            message = (
                f"Category raster has shape {labels.shape} but its grid is"
                f" {self.grid.height}x{self.grid.width}."
            )
            raise UvlUserError(message)
        if self.legend.get(NO_DATA, "no data") != "no data":
            message = 'Code 0 is reserved for "no data" and cannot name a category.'
            raise UvlUserError(message)
        present = {int(code) for code in np.unique(labels)} - {NO_DATA}
        unknown = sorted(present - set(self.legend))
        if unknown:
            message = f"Label codes {unknown} are missing from the legend."
            raise UvlUserError(message)
        object.__setattr__(self, "labels", _frozen_copy(labels, np.uint8))
        object.__setattr__(
            self,
            "legend",
            {code: name for code, name in sorted(self.legend.items()) if code},
        )
