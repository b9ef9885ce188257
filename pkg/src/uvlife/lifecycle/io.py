"""Parcel tables as GeoJSON features (nested per-year attributes) and flat CSV."""

import pathlib
from collections.abc import Callable
from typing import Any

import pandas as pd

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_csv
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.io import Feature, read_features, write_features
from uvlife.geo.polygon_set import PolygonSet

from .categories import AssignmentMethod, LandUseCategory
from .parcels import LifecycleParcel


def _by_year[T](
    values: dict[int, T | None], convert: Callable[[T], str]
) -> dict[str, Any]:
    return {
        str(year): None if value is None else convert(value)
        for year, value in sorted(values.items())
    }


def parcel_properties(parcel: LifecycleParcel) -> dict[str, Any]:
    complete = parcel.is_complete
    pathway = parcel.pathway if complete else None
    return {
        "id": parcel.id,
        "parent_id": parcel.parent_id,
        "area_m2": parcel.area,
        "demolished_area_m2": parcel.demolished_area,
        "phase": parcel.phase.value if complete else None,
        "pathway": pathway.value if pathway else None,
        "categories": _by_year(parcel.categories, lambda c: c.value),
        "provenance": _by_year(parcel.provenance, lambda m: m.value),
        "evidence": {str(year): text for year, text in sorted(parcel.evidence.items())},
    }


def write_parcels(
    path: pathlib.Path, parcels: list[LifecycleParcel], crs: ProjectedCrs
) -> pathlib.Path:
    features = [
        Feature(parcel.geometry.geometry, parcel_properties(parcel))
        for parcel in sorted(parcels, key=lambda p: p.id)
    ]
    return write_features(path, features, crs)


def _parse_years[T](
    raw: dict[str, Any] | None, convert: Callable[[str], T], label: str
) -> dict[int, T | None]:
    try:
        return {
            int(year): None if value is None else convert(value)
            for year, value in (raw or {}).items()
        }
    except ValueError as e:
        message = f"{label}: unreadable per-year values {raw}."
        raise UvlUserError(message) from e


def read_parcels(
    path: pathlib.Path, crs: ProjectedCrs | None = None
) -> list[LifecycleParcel]:
    """Read parcels written by `write_parcels`."""
    collection = read_features(path, crs)
    parcels = []
    for index, feature in enumerate(collection.features):
        properties = feature.properties
        label = f"{path}, feature {index}"
        if "id" not in properties:
            message = f"{label} has no `id`."
            raise UvlUserError(message)
        categories = _parse_years(properties.get("categories"), LandUseCategory, label)
        provenance = _parse_years(properties.get("provenance"), AssignmentMethod, label)
        parcels.append(
            LifecycleParcel(
                id=str(properties["id"]),
                geometry=PolygonSet.from_polygons([feature.geometry], collection.crs),
                categories=categories,
                provenance={year: provenance.get(year) for year in categories},
                demolished_area=float(properties.get("demolished_area_m2", 0.0)),
                evidence={
                    int(year): str(text)
                    for year, text in (properties.get("evidence") or {}).items()
                },
                parent_id=properties.get("parent_id"),
            )
        )
    return parcels


def parcel_frame(parcels: list[LifecycleParcel], years: list[int]) -> pd.DataFrame:
    """One row per parcel with a category and method column per year."""
    rows = []
    for parcel in sorted(parcels, key=lambda p: p.id):
        properties = parcel_properties(parcel)
        row = {
            key: properties[key]
            for key in ("id", "parent_id", "area_m2", "demolished_area_m2", "phase")
        }
        row["pathway"] = properties["pathway"]
        for year in years:
            row[f"category_{year}"] = properties["categories"].get(str(year))
            row[f"method_{year}"] = properties["provenance"].get(str(year))
        rows.append(row)
    columns = ["id", "parent_id", "area_m2", "demolished_area_m2", "phase", "pathway"]
    for year in years:
        columns += [f"category_{year}", f"method_{year}"]
    return pd.DataFrame(rows, columns=columns)


def write_parcels_csv(
    path: pathlib.Path, parcels: list[LifecycleParcel], years: list[int]
) -> pathlib.Path:
    return atomic_write_csv(path, parcel_frame(parcels, years))
