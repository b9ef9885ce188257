from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from uvlife.exception import UvlUserError

from .metrics import UvMetrics


@dataclass(frozen=True)
class ModelScore:
    dataset: str
    method: str
    metrics: UvMetrics


def compare_models(scores: Sequence[ModelScore]) -> dict[str, ModelScore]:
    """Best method per dataset by mIoU; ties go to the higher UV IoU, then name.

    The chosen method per city is the one applied to every later year of that
    city.
    """
    seen: set[tuple[str, str]] = set()
    best: dict[str, ModelScore] = {}
    for score in scores:
        key = (score.dataset, score.method)
        if key in seen:
            message = f"Method `{score.method}` is listed twice for `{score.dataset}`."
            raise UvlUserError(message)
        seen.add(key)
        if score.metrics.miou is None:
            continue
        current = best.get(score.dataset)
        if current is None or _rank(score) < _rank(current):
            best[score.dataset] = score
    return dict(sorted(best.items()))


def _rank(score: ModelScore) -> tuple[float, float, str]:
    return (
        -(score.metrics.miou or 0.0),
        -(score.metrics.uv_iou or 0.0),
        score.method,
    )


def mixed_city_sample[T](
    tiles_by_city: Mapping[str, Sequence[T]],
    seed: int,
    per_city: int | None = None,
) -> list[tuple[str, T]]:
    """Draw the same number of tiles from every city for a cross-city dataset.

    Args:
        tiles_by_city: Candidate tiles per city.
        seed: Seed of the sampler.
        per_city: Tiles per city; defaults to the size of the smallest city.

    Returns:
        (city, tile) pairs, cities in name order, tiles in their input order.
    """
    if not tiles_by_city:
        return []
    smallest = min(len(tiles) for tiles in tiles_by_city.values())
    count = smallest if per_city is None else per_city
    if count < 0 or count > smallest:
        message = (
            f"Cannot draw {count} tiles per city; the smallest city has {smallest}."
        )
        raise UvlUserError(message)
    rng = np.random.default_rng(seed)
    sample = []
    for city in sorted(tiles_by_city):
        tiles = tiles_by_city[city]
        chosen = np.sort(rng.choice(len(tiles), size=count, replace=False))
        sample.extend((city, tiles[int(i)]) for i in chosen)
    return sample
