from .comparison import ModelScore, compare_models, mixed_city_sample
from .metrics import (
    ConfusionCounts,
    UvMetrics,
    confusion,
    confusion_over_tiles,
    uv_metrics,
    uv_metrics_from_rates,
)
from .splitting import (
    SampleTile,
    SplitResult,
    block_split,
    buffer_exclude,
    read_samples,
    write_split,
)

__all__ = [
    "ConfusionCounts",
    "ModelScore",
    "SampleTile",
    "SplitResult",
    "UvMetrics",
    "block_split",
    "buffer_exclude",
    "compare_models",
    "confusion",
    "confusion_over_tiles",
    "mixed_city_sample",
    "read_samples",
    "uv_metrics",
    "uv_metrics_from_rates",
    "write_split",
]
