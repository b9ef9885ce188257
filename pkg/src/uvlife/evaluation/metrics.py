"""Pixel metrics of urban-village segmentation, micro-aggregated over tiles."""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from uvlife.exception import UvlUserError
from uvlife.files import map_in_order
from uvlife.geo.grid import BinaryMask


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            message = "Confusion counts cannot be negative."
            raise UvlUserError(message)

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(
            self.tp + other.tp,
            self.fp + other.fp,
            self.fn + other.fn,
            self.tn + other.tn,
        )

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def flipped(self) -> "ConfusionCounts":
        """Counts with the urban-village and background classes swapped."""
        return ConfusionCounts(tp=self.tn, fp=self.fn, fn=self.fp, tn=self.tp)


def confusion(pred: BinaryMask, gt: BinaryMask) -> ConfusionCounts:
    if pred.grid != gt.grid:
        message = "Prediction and ground truth must share one grid."
        raise UvlUserError(message)
    p = pred.bits.astype(bool)
    g = gt.bits.astype(bool)
    return ConfusionCounts(
        tp=int(np.count_nonzero(p & g)),
        fp=int(np.count_nonzero(p & ~g)),
        fn=int(np.count_nonzero(~p & g)),
        tn=int(np.count_nonzero(~p & ~g)),
    )


def confusion_over_tiles(
    pairs: Iterable[tuple[BinaryMask, BinaryMask]], jobs: int = 1
) -> ConfusionCounts:
    """Sum of per-tile counts (micro aggregation)."""
    counts = map_in_order(lambda pair: confusion(*pair), list(pairs), jobs)
    return sum(counts, ConfusionCounts())


def _ratio(numerator: int, denominator: int) -> float | None:
    return numerator / denominator if denominator else None


@dataclass(frozen=True)
class UvMetrics:
    """Fractions in [0, 1]; None where a denominator is zero."""

    uv_iou: float | None
    uv_recall: float | None
    uv_precision: float | None
    background_iou: float | None
    miou: float | None

    def as_percent(self) -> dict[str, float | None]:
        return {
            name: None if value is None else round(100 * value, 2)
            for name, value in vars(self).items()
        }


def uv_metrics(counts: ConfusionCounts) -> UvMetrics:
    """UV IoU, recall and precision, background IoU and their mean (mIoU).

    A metric whose denominator is zero is None (undefined), never 0. mIoU is
    the mean of both class IoUs, so it is undefined as soon as either class IoU
    is, for example on a tile with no urban village in the prediction or the
    truth.
    """
    uv_iou = _ratio(counts.tp, counts.tp + counts.fp + counts.fn)
    background_iou = _ratio(counts.tn, counts.tn + counts.fp + counts.fn)
    miou = None
    if uv_iou is not None and background_iou is not None:
        miou = (uv_iou + background_iou) / 2
    return UvMetrics(
        uv_iou=uv_iou,
        uv_recall=_ratio(counts.tp, counts.tp + counts.fn),
        uv_precision=_ratio(counts.tp, counts.tp + counts.fp),
        background_iou=background_iou,
        miou=miou,
    )


def uv_metrics_from_rates(precision: float, recall: float) -> float:
    """UV IoU implied by a precision and recall pair (fractions in (0, 1]).

    Since tp/IoU = tp + fp + fn = tp/P + tp/R - tp, IoU = 1 / (1/P + 1/R - 1).

    Example:
        ```py
        100 * uv_metrics_from_rates(0.9114, 0.8271)  # 76.55...
        ```
    """
    if not (0 < precision <= 1 and 0 < recall <= 1):
        message = (
            f"Precision and recall must lie in (0, 1], got {precision} and {recall}."
        )
        raise UvlUserError(message)
    return 1 / (1 / precision + 1 / recall - 1)
