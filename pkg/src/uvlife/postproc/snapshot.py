from dataclasses import dataclass

from uvlife.exception import UvlUserError
from uvlife.geo.crs import require_same_crs
from uvlife.geo.polygon_set import PolygonSet


@dataclass(frozen=True, eq=False)
class UVSnapshot:
    """Urban-village extent detected for one observation year."""

    year: int
    extent: PolygonSet
    provenance: str = ""


def check_snapshot_years(snapshots: list[UVSnapshot]) -> None:
    """Require strictly increasing, unique years in one CRS."""
    years = [snapshot.year for snapshot in snapshots]
    duplicates = sorted({year for year in years if years.count(year) > 1})
    if duplicates:
        message = f"Each year may have only one snapshot; duplicated: {duplicates}."
        raise UvlUserError(message)
    if years != sorted(years):
        message = f"Snapshots must be ordered by year; got {years}."
        raise UvlUserError(message)
    if snapshots:
        require_same_crs(*(snapshot.extent.crs for snapshot in snapshots))
