import enum
import threading
from collections.abc import Iterable

import numpy as np

from uvlife.exception import UvlUserError
from uvlife.geo.grid import BinaryMask

from .plan import TilePlan

# Probabilities are summed as integers in steps of 2**-24 so that addition is
# associative and the stitched mask cannot depend on tile arrival order.
FIXED_POINT_SCALE = 1 << 24


class BlendMode(str, enum.Enum):
    mean = "mean"
    majority = "majority"


class StitchAccumulator:
    """Per-pixel sum and count buffers for one tile plan.

    `add` may be called from several threads in any order; `result` is the same
    for every order.
    """

    def __init__(self, plan: TilePlan, blend: BlendMode = BlendMode.mean):
        self.plan = plan
        self.blend = BlendMode(blend)
        self._sums = np.zeros(plan.grid.shape, dtype=np.int64)
        self._counts = np.zeros(plan.grid.shape, dtype=np.int64)
        self._seen: set[int] = set()
        self._lock = threading.Lock()

    def add(self, index: int, probabilities: np.ndarray) -> None:
        if not 0 <= index < len(self.plan.windows):
            message = f"Tile {index} is not part of the plan."
            raise UvlUserError(message)
        window = self.plan.windows[index]
        values = np.asarray(probabilities, dtype=np.float64)
        if values.shape != (window.height, window.width):
            message = (
                f"Tile {index} has shape {values.shape}; its window is"
                f" {window.height}x{window.width}."
            )
            raise UvlUserError(message)
        if not np.isfinite(values).all() or values.min() < 0 or values.max() > 1:
            message = f"Tile {index} holds values outside [0, 1]."
            raise UvlUserError(message)

        if self.blend is BlendMode.mean:
            contribution = np.rint(values * FIXED_POINT_SCALE).astype(np.int64)
        else:
            contribution = (values >= 0.5).astype(np.int64)

        with self._lock:
            if index in self._seen:
                message = f"Tile {index} was supplied twice."
                raise UvlUserError(message)
            self._seen.add(index)
            rows, cols = window.slices
            self._sums[rows, cols] += contribution
            self._counts[rows, cols] += 1

    @property
    def missing(self) -> list[int]:
        return sorted(set(range(len(self.plan.windows))) - self._seen)

    def result(self) -> BinaryMask:
        """Threshold the blended values; a pixel at exactly 0.5 becomes 1."""
        if self.missing:
            message = f"Missing tiles for windows {self.missing}."
            raise UvlUserError(message)
        unit = FIXED_POINT_SCALE if self.blend is BlendMode.mean else 1
        bits = (2 * self._sums >= self._counts * unit).astype(np.uint8)
        return BinaryMask(self.plan.grid, bits)


def stitch(
    plan: TilePlan,
    tiles: Iterable[np.ndarray] | dict[int, np.ndarray],
    blend: BlendMode = BlendMode.mean,
) -> BinaryMask:
    """Merge per-window probability grids into one mask.

    Args:
        plan: The plan the tiles were cut with.
        tiles: One probability grid per window, either in window order or keyed
            by window index.
        blend: `mean` thresholds the mean probability at 0.5; `majority` counts
            tiles voting foreground (p >= 0.5) and keeps ties.

    Returns:
        The stitched mask on the plan's grid.
    """
    indexed = dict(tiles) if isinstance(tiles, dict) else dict(enumerate(tiles))
    extra = sorted(i for i in indexed if not 0 <= i < len(plan.windows))
    missing = sorted(set(range(len(plan.windows))) - set(indexed))
    if extra or missing:
        parts = []
        if missing:
            parts.append(f"missing windows {missing}")
        if extra:
            parts.append(f"unexpected windows {extra}")
        message = f"Tiles do not match the plan: {'; '.join(parts)}."
        raise UvlUserError(message)

    accumulator = StitchAccumulator(plan, blend)
    for index in sorted(indexed):
        accumulator.add(index, indexed[index])
    return accumulator.result()
