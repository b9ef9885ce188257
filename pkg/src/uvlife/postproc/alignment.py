import enum
import logging
from dataclasses import dataclass

import shapely

from uvlife.exception import UvlUserError
from uvlife.geo.io import FeatureCollection
from uvlife.geo.polygon_set import (
    PolygonSet,
    difference,
    iou,
    union,
    union_all,
    validate_polygonal,
)

from .snapshot import UVSnapshot, check_snapshot_years

logger = logging.getLogger(__name__)


MAX_SNAP_PASSES = 8


def align_temporal(
    snapshots: list[UVSnapshot], iou_threshold: float = 0.9
) -> list[UVSnapshot]:
    """Snap later-year components back onto matching earliest-year components.

    Detections of the same village drift by a pixel or two between years. A
    later component whose best IoU with an earliest-year component reaches
    `iou_threshold` is replaced by that earliest-year component; all other
    components pass through untouched. A snapped component can merge with an
    untouched neighbour into a new component that would snap again, so passes
    repeat until the extent stops changing. The result is then a fixed point
    and aligning it again returns it unchanged.

    Args:
        snapshots: Snapshots in increasing year order, at least two.
        iou_threshold: Minimum IoU for snapping, in (0, 1].

    Returns:
        New snapshots with the same years; the earliest one is returned as is.
    """
    if len(snapshots) < 2:
        message = "Temporal alignment needs at least two snapshots."
        raise UvlUserError(message)
    if not 0 < iou_threshold <= 1:
        message = f"iou_threshold must lie in (0, 1], got {iou_threshold}."
        raise UvlUserError(message)
    check_snapshot_years(snapshots)

    reference = snapshots[0]
    reference_components = reference.extent.components()
    tree = shapely.STRtree([c.geometry for c in reference_components])

    aligned = [reference]
    for snapshot in snapshots[1:]:
        extent = snapshot.extent
        for passes in range(1, MAX_SNAP_PASSES + 1):
            snapped_extent, snapped = _snap_components(
                extent, reference_components, tree, iou_threshold
            )
            if passes == 1:
                logger.info(
                    "Aligned %d: %d of %d components snapped to %d",
                    snapshot.year,
                    snapped,
                    len(extent.polygons),
                    reference.year,
                )
            if _same_extent(snapped_extent, extent):
                break
            extent = snapped_extent
        else:
            logger.warning(
                "Alignment of %d did not settle after %d passes",
                snapshot.year,
                MAX_SNAP_PASSES,
            )
        aligned.append(UVSnapshot(snapshot.year, extent, snapshot.provenance))
    return aligned


def _same_extent(a: PolygonSet, b: PolygonSet) -> bool:
    if a.is_empty or b.is_empty:
        return a.is_empty and b.is_empty
    return bool(a.geometry.equals(b.geometry))


def _snap_components(
    extent: PolygonSet,
    reference_components: list[PolygonSet],
    tree: shapely.STRtree,
    iou_threshold: float,
) -> tuple[PolygonSet, int]:
    pieces = []
    snapped = 0
    for component in extent.components():
        candidates = tree.query(component.geometry, predicate="intersects")
        best_score, best = 0.0, None
        for candidate in sorted(int(i) for i in candidates):
            score = iou(component, reference_components[candidate])
            if score > best_score:
                best_score, best = score, reference_components[candidate]
        if best is not None and best_score >= iou_threshold:
            pieces.append(best)
            snapped += 1
        else:
            pieces.append(component)
    return union_all(pieces, extent.crs), snapped


class EditAction(str, enum.Enum):
    add = "add"
    remove = "remove"


@dataclass(frozen=True, eq=False)
class ManualEdit:
    year: int
    action: EditAction
    extent: PolygonSet


def manual_edits_from_features(collection: FeatureCollection) -> list[ManualEdit]:
    """Read edits from features carrying `year` and `action` (`add` | `remove`)."""
    edits = []
    for index, feature in enumerate(collection.features):
        properties = feature.properties
        try:
            year = int(properties["year"])
            action = EditAction(properties["action"])
        except (KeyError, TypeError, ValueError) as e:
            message = (
                f"Manual edit {index} needs an integer `year` and an `action` of"
                " `add` or `remove`."
            )
            raise UvlUserError(message) from e
        validate_polygonal(feature.geometry, label=f"manual edit {index}")
        edits.append(
            ManualEdit(
                year,
                action,
                PolygonSet.from_polygons([feature.geometry], collection.crs),
            )
        )
    return edits


def apply_manual_edits(
    snapshots: list[UVSnapshot], edits: list[ManualEdit]
) -> list[UVSnapshot]:
    """Apply verified corrections in file order: add unions, remove subtracts."""
    by_year = {snapshot.year: snapshot for snapshot in snapshots}
    unknown = sorted({edit.year for edit in edits} - set(by_year))
    if unknown:
        message = f"Manual edits refer to years without a snapshot: {unknown}."
        raise UvlUserError(message)

    extents = {year: snapshot.extent for year, snapshot in by_year.items()}
    for edit in edits:
        operation = union if edit.action is EditAction.add else difference
        extents[edit.year] = operation(extents[edit.year], edit.extent)
    if edits:
        logger.info("Applied %d manual edits", len(edits))
    edited_years = {edit.year for edit in edits}
    return [
        UVSnapshot(
            snapshot.year,
            extents[snapshot.year],
            f"{snapshot.provenance}; manual edits"
            if snapshot.year in edited_years
            else snapshot.provenance,
        )
        for snapshot in snapshots
    ]
