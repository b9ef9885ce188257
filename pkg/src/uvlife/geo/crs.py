import functools
from dataclasses import dataclass

import pyproj
import pyproj.exceptions

from uvlife.exception import CrsMismatchError, UvlUserError

METRE_UNIT_NAMES = ("metre", "meter", "m")


@dataclass(frozen=True)
class ProjectedCrs:
    epsg_code: int
    unit: str = "metre"

    def __post_init__(self) -> None:
        if self.unit not in METRE_UNIT_NAMES:
            message = (
                f"EPSG:{self.epsg_code} uses `{self.unit}` units; only metre-based"
                " projected systems are accepted."
            )
            raise UvlUserError(message)

    @classmethod
    def from_user_input(cls, value: "str | int | ProjectedCrs") -> "ProjectedCrs":
        """Parse `EPSG:32650`, `32650` or an existing instance.

        Why:
            Areas are reported in square metres, so degree-based or foot-based
            systems would silently corrupt every figure. They are rejected at
            ingest rather than reprojected (reprojection happens upstream).

        Example:
            ```py
            ProjectedCrs.from_user_input("EPSG:32650").epsg_code  # 32650
            ProjectedCrs.from_user_input(4326)  # raises UvlUserError
            ```

        Args:
            value: EPSG code, `EPSG:` string, or an instance.

        Returns:
            The validated projected CRS.
        """
        if isinstance(value, ProjectedCrs):
            return value
        return _parse_crs(str(value).strip())

    def __str__(self) -> str:
        return f"EPSG:{self.epsg_code}"


@functools.lru_cache(maxsize=64)
def _parse_crs(text: str) -> ProjectedCrs:
    if text.isdigit():
        text = f"EPSG:{text}"
    try:
        crs = pyproj.CRS.from_user_input(text)
    except pyproj.exceptions.CRSError as e:
        message = f"`{text}` is not a recognised coordinate reference system."
        raise UvlUserError(message) from e

    epsg_code = crs.to_epsg()
    if epsg_code is None:
        message = f"`{text}` has no EPSG code; declare the CRS as `EPSG:<code>`."
        raise UvlUserError(message)
    if not crs.is_projected:
        message = (
            f"EPSG:{epsg_code} is a geographic system. Reproject the data to a"
            " projected, metre-based system before ingest."
        )
        raise UvlUserError(message)

    unit_name = crs.axis_info[0].unit_name if crs.axis_info else ""
    return ProjectedCrs(epsg_code=epsg_code, unit=unit_name)


def require_same_crs(*crs_values: ProjectedCrs) -> ProjectedCrs:
    """Return the shared CRS of all arguments or raise `CrsMismatchError`."""
    first = crs_values[0]
    for other in crs_values[1:]:
        if other.epsg_code != first.epsg_code:
            message = f"CRS mismatch: {first} and {other}. One run uses one CRS."
            raise CrsMismatchError(message)
    return first
