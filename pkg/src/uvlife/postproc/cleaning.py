import logging

from shapely.geometry import MultiPolygon

from uvlife.exception import UvlUserError
from uvlife.geo.conversion import vectorize
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.grid import BinaryMask
from uvlife.geo.polygon_set import PolygonSet

from .morphology import ElementShape, StructuringElement, morph_close, morph_open

logger = logging.getLogger(__name__)


def drop_small(s: PolygonSet, min_area: float) -> PolygonSet:
    """Remove connected components smaller than `min_area` square metres."""
    if min_area < 0:
        message = f"min_area must be non-negative, got {min_area}."
        raise UvlUserError(message)
    kept = [polygon for polygon in s.polygons if polygon.area >= min_area]
    dropped = len(s.polygons) - len(kept)
    if dropped:
        logger.debug("Dropped %d components below %s m2", dropped, min_area)
    return PolygonSet(MultiPolygon(kept), s.crs)


def clean_mask(
    mask: BinaryMask,
    crs: ProjectedCrs,
    element_shape: ElementShape = ElementShape.square,
    close_radius: int = 2,
    open_radius: int = 2,
    min_area: float = 400.0,
    jobs: int = 1,
) -> PolygonSet:
    """Close, open, vectorize and despeckle a stitched mask into a boundary set."""
    closed = morph_close(
        mask, StructuringElement(shape=element_shape, radius=close_radius), jobs
    )
    opened = morph_open(
        closed, StructuringElement(shape=element_shape, radius=open_radius), jobs
    )
    logger.debug(
        "Morphology: %d -> %d -> %d foreground cells",
        mask.count,
        closed.count,
        opened.count,
    )
    return drop_small(vectorize(opened, crs), min_area)
