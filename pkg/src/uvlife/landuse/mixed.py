import dataclasses
import logging

import numpy as np

from uvlife.exception import UvlUserError
from uvlife.geo.conversion import vectorize
from uvlife.geo.grid import BinaryMask
from uvlife.geo.polygon_set import intersection
from uvlife.lifecycle.categories import AssignmentMethod
from uvlife.lifecycle.parcels import LifecycleParcel

from .assignment import EvidenceIndex
from .dominant import TIE_PRIORITY, dominant_land_use

logger = logging.getLogger(__name__)

DEFAULT_MIXED_USE_THRESHOLD = 0.25


def split_mixed_use(
    parcel: LifecycleParcel,
    year: int,
    index: EvidenceIndex,
    threshold: float = DEFAULT_MIXED_USE_THRESHOLD,
) -> list[LifecycleParcel]:
    """Split a cleared parcel along OSM class boundaries when it is mixed use.

    When the second-largest OSM category covers more than `threshold` of the
    parcel, the parcel is cut into one child per category, ids `<id>.1`,
    `<id>.2`, ... in category order. Cells without OSM cover join the dominant
    category, so the children tile the parent exactly. Otherwise the parcel is
    returned unchanged.

    Args:
        parcel: Parcel with `year` still pending and no remaining village.
        year: The observation year the OSM evidence belongs to.
        index: The year's evidence index.
        threshold: Minimum share of the runner-up category.

    Returns:
        The children, or `[parcel]`.
    """
    if not 0 < threshold < 1:
        message = f"mixed_use_threshold must lie in (0, 1), got {threshold}."
        raise UvlUserError(message)
    cover = index.osm_cover(parcel.geometry)
    counts = cover.counts()
    if (
        len(counts) < 2
        or cover.parcel_cells == 0
        or cover.coverage < index.osm_coverage_gate
    ):
        return [parcel]
    ranked = sorted(
        counts, key=lambda category: (-counts[category], TIE_PRIORITY.index(category))
    )
    runner_up_share = counts[ranked[1]] / cover.parcel_cells
    if runner_up_share <= threshold:
        return [parcel]

    dominant = dominant_land_use(counts)
    assert dominant is not None
    labels = np.where(
        cover.inside.astype(bool) & (cover.labels > 0), cover.labels, dominant.code
    )
    children = []
    for category in sorted(counts, key=lambda c: c.code):
        region = vectorize(
            BinaryMask(cover.grid, (labels == category.code).astype(np.uint8)),
            parcel.geometry.crs,
        )
        geometry = intersection(parcel.geometry, region)
        if geometry.is_empty:
            continue
        child = dataclasses.replace(
            parcel,
            id=f"{parcel.id}.{len(children) + 1}",
            geometry=geometry,
            demolished_area=geometry.area,
            parent_id=parcel.id,
        )
        share = counts[category] / cover.parcel_cells
        children.append(
            child.with_category(
                year,
                category,
                AssignmentMethod.poi_osm,
                f"mixed-use split, osm share {share:.2f}",
            )
        )
    logger.info("Split mixed-use parcel %s into %d parts", parcel.id, len(children))
    return children
