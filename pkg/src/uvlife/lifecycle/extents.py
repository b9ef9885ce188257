"""Pixel-exact lifecycle extents computed from aligned yearly snapshots."""

from collections.abc import Mapping
from dataclasses import dataclass

from uvlife.exception import UvlUserError
from uvlife.geo.polygon_set import (
    PolygonSet,
    difference,
    intersection_all,
    union_all,
)

from .timeline import Timeline


def _ordered_extents(
    snapshots: Mapping[int, PolygonSet], timeline: Timeline
) -> list[PolygonSet]:
    missing = [year for year in timeline if year not in snapshots]
    if missing:
        message = f"No snapshot for timeline years {missing}."
        raise UvlUserError(message)
    return [snapshots[year] for year in timeline]


def remained_extent(
    snapshots: Mapping[int, PolygonSet], timeline: Timeline
) -> PolygonSet:
    """Area detected as urban village in every observation year."""
    return intersection_all(_ordered_extents(snapshots, timeline))


def study_universe(
    snapshots: Mapping[int, PolygonSet], timeline: Timeline
) -> PolygonSet:
    """Union of every year but the last: the footprint parcels are drawn from."""
    extents = _ordered_extents(snapshots, timeline)
    return union_all(extents[:-1], extents[0].crs)


def demolished_extent(
    snapshots: Mapping[int, PolygonSet], timeline: Timeline
) -> PolygonSet:
    """Urban-village area of earlier years that is gone in the last year.

    With three years this is `(B_T1 | B_T2) - B_T3`.
    """
    extents = _ordered_extents(snapshots, timeline)
    return difference(union_all(extents[:-1], extents[0].crs), extents[-1])


def detect_incomplete(
    parcel_early: PolygonSet, parcel_late: PolygonSet, delta: float
) -> bool:
    """True when the late extent survives but shrank to at most `1 - delta`.

    Example:
        ```py
        detect_incomplete(square_10000_m2, part_6000_m2, delta=0.3)  # True
        detect_incomplete(square_10000_m2, empty, delta=0.3)  # False
        ```
    """
    if not 0 < delta < 1:
        message = f"delta must lie in (0, 1), got {delta}."
        raise UvlUserError(message)
    if parcel_early.area == 0:
        message = "Cannot measure shrinkage of a parcel with zero area."
        raise UvlUserError(message)
    ratio = parcel_late.area / parcel_early.area
    return 0 < ratio <= 1 - delta


@dataclass(frozen=True, eq=False)
class LifecyclePartition:
    remained: PolygonSet
    demolished: PolygonSet
    emerged: PolygonSet
    footprint: PolygonSet

    def areas(self) -> dict[str, float]:
        return {
            "remained": self.remained.area,
            "demolished": self.demolished.area,
            "emerged": self.emerged.area,
            "footprint": self.footprint.area,
        }


def partition(
    snapshots: Mapping[int, PolygonSet], timeline: Timeline
) -> LifecyclePartition:
    """Split the all-years footprint into remained, demolished and emerged parts.

    `emerged` is the last year's extent outside `remained`. The three parts are
    pairwise disjoint and together cover the union of every year.
    """
    extents = _ordered_extents(snapshots, timeline)
    remained = intersection_all(extents)
    return LifecyclePartition(
        remained=remained,
        demolished=demolished_extent(snapshots, timeline),
        emerged=difference(extents[-1], remained),
        footprint=union_all(extents, extents[0].crs),
    )
