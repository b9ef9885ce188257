"""Binary morphology on masks.

Cells outside the grid count as background for dilation and as foreground for
erosion. That pair is an adjunction on the finite grid, so opening and closing
are idempotent, `open(m) <= m <= close(m)` holds pixelwise, and a mask with
every cell set is left unchanged.
"""

import enum
import functools

import numpy as np
import pydantic
import scipy.ndimage

from uvlife.files import map_in_order
from uvlife.geo.grid import BinaryMask
from uvlife.schema.models.base import FrozenModel

# Rows per band when morphology is split across workers.
MIN_BAND_ROWS = 64


class ElementShape(str, enum.Enum):
    square = "square"
    disk = "disk"


class StructuringElement(FrozenModel):
    shape: ElementShape = ElementShape.square
    radius: int = pydantic.Field(default=2, ge=1)

    @property
    def footprint(self) -> np.ndarray:
        return _footprint(self.shape, self.radius)


@functools.lru_cache(maxsize=32)
def _footprint(shape: ElementShape, radius: int) -> np.ndarray:
    offsets = np.arange(-radius, radius + 1)
    if shape is ElementShape.square:
        footprint = np.ones((offsets.size, offsets.size), dtype=bool)
    else:
        dy, dx = np.meshgrid(offsets, offsets, indexing="ij")
        footprint = dx * dx + dy * dy <= radius * radius
    footprint.flags.writeable = False
    return footprint


def _apply(
    bits: np.ndarray,
    element: StructuringElement,
    operation: str,
    jobs: int,
) -> np.ndarray:
    radius = element.radius
    border = 0 if operation == "dilate" else 1
    padded = np.pad(bits.astype(bool), radius, constant_values=bool(border))
    function = (
        scipy.ndimage.binary_dilation
        if operation == "dilate"
        else scipy.ndimage.binary_erosion
    )
    height = bits.shape[0]

    def run_band(band: tuple[int, int]) -> np.ndarray:
        start, stop = band
        # The band plus a halo of `radius` rows on each side of the padded array.
        chunk = padded[start : stop + 2 * radius]
        result = function(chunk, structure=element.footprint, border_value=border)
        return result[radius : radius + stop - start, radius:-radius]

    band_rows = max(MIN_BAND_ROWS, -(-height // max(jobs, 1)))
    bands = [
        (start, min(start + band_rows, height))
        for start in range(0, height, band_rows)
    ]
    return np.vstack(map_in_order(run_band, bands, jobs)).astype(np.uint8)


def dilate(
    mask: BinaryMask, element: StructuringElement, jobs: int = 1
) -> BinaryMask:
    return BinaryMask(mask.grid, _apply(mask.bits, element, "dilate", jobs))


def erode(mask: BinaryMask, element: StructuringElement, jobs: int = 1) -> BinaryMask:
    return BinaryMask(mask.grid, _apply(mask.bits, element, "erode", jobs))


def morph_close(
    mask: BinaryMask, element: StructuringElement, jobs: int = 1
) -> BinaryMask:
    """Dilation followed by erosion; fills gaps narrower than the element."""
    return erode(dilate(mask, element, jobs), element, jobs)


def morph_open(
    mask: BinaryMask, element: StructuringElement, jobs: int = 1
) -> BinaryMask:
    """Erosion followed by dilation; removes specks smaller than the element."""
    return dilate(erode(mask, element, jobs), element, jobs)
