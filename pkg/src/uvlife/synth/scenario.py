"""Seeded synthetic cities whose lifecycle is known in advance.

Parcels sit on a lattice of squares separated by gaps. Each parcel follows a
scripted (or randomly drawn, always legal) category sequence, and the
generator plants exactly the evidence that lets a run recover it: boundary
extents for urban-village years, a shrunken remainder for incomplete
demolitions, OSM footprints and POIs for stable uses, and imagery texture for
vacant land and construction sites.
"""

import logging
import math
import pathlib
from dataclasses import dataclass

import numpy as np
import pandas as pd
from shapely.geometry import LineString, Polygon, box

from uvlife.analytics.matrix import CATEGORIES, TransitionMatrix, write_matrix_csv
from uvlife.files import atomic_write_csv
from uvlife.geo.conversion import rasterize
from uvlife.geo.crs import ProjectedCrs
from uvlife.geo.grid import AffineGrid
from uvlife.geo.io import Feature, write_features, write_mask, write_raster
from uvlife.geo.polygon_set import PolygonSet
from uvlife.lifecycle.categories import (
    TRANSITIONAL_CATEGORIES,
    LandUseCategory,
    Pathway,
    PhaseLabel,
)
from uvlife.lifecycle.parcels import parcel_id
from uvlife.lifecycle.phases import assign_phase, classify_pathway
from uvlife.schema.models.scenario import ParcelScript, ScenarioScript
from uvlife.schema.yaml_writer import write_yaml

logger = logging.getLogger(__name__)

UV = LandUseCategory.UrbanVillage
INCOMPLETE = LandUseCategory.IncompleteDemolition
CLEARED = (
    LandUseCategory.VacantLand,
    LandUseCategory.ConstructionSite,
    LandUseCategory.Buildings,
    LandUseCategory.GreenSpaces,
    LandUseCategory.Others,
)

OSM_TAGS: dict[LandUseCategory, dict[str, str]] = {
    LandUseCategory.Buildings: {"building": "residential"},
    LandUseCategory.GreenSpaces: {"leisure": "park"},
    LandUseCategory.Others: {"amenity": "parking"},
}
POI_CHOICES: dict[LandUseCategory, tuple[str, ...]] = {
    LandUseCategory.Buildings: ("residential", "commercial", "office"),
    LandUseCategory.GreenSpaces: ("park",),
    LandUseCategory.Others: ("transport",),
}

# 8-bit luminance planted in the imagery.
BACKGROUND_LUMINANCE = 128
VACANT_LUMINANCE = 102
CONSTRUCTION_LUMINANCE = (51, 204)
POI_INSET = 5.0


@dataclass(frozen=True)
class ParcelTruth:
    id: str
    bounds: tuple[float, float, float, float]
    sequence: tuple[LandUseCategory, ...]
    remaining: float

    @property
    def area(self) -> float:
        minx, miny, maxx, maxy = self.bounds
        return (maxx - minx) * (maxy - miny)

    @property
    def phase(self) -> PhaseLabel:
        return assign_phase(self.sequence)

    @property
    def pathway(self) -> Pathway | None:
        return classify_pathway(self.sequence)


@dataclass(frozen=True)
class ScenarioBundle:
    directory: pathlib.Path
    config_path: pathlib.Path
    parcels: list[ParcelTruth]
    matrices: list[TransitionMatrix]


def random_sequence(rng: np.random.Generator, length: int) -> list[LandUseCategory]:
    """Draw a legal category sequence that starts as an urban village."""
    sequence = [UV]
    for _ in range(length - 1):
        previous = sequence[-1]
        if previous is UV:
            options = (UV, INCOMPLETE, *CLEARED)
        elif previous is INCOMPLETE:
            options = (INCOMPLETE, *CLEARED)
        else:
            options = CLEARED
        sequence.append(options[int(rng.integers(len(options)))])
    return sequence


def lay_out_parcels(
    script: ScenarioScript, rng: np.random.Generator
) -> list[ParcelTruth]:
    scripted = list(script.parcels) + [
        ParcelScript(sequence=random_sequence(rng, len(script.timeline)))
        for _ in range(script.random_parcels)
    ]
    step = script.parcel_size + script.gap
    truths = []
    for index, parcel_script in enumerate(scripted):
        row, column = divmod(index, script.columns)
        minx = script.origin[0] + column * step
        miny = script.origin[1] + row * step
        size = script.parcel_size
        truths.append(
            ParcelTruth(
                id=parcel_id(index),
                bounds=(minx, miny, minx + size, miny + size),
                sequence=tuple(parcel_script.sequence),
                remaining=parcel_script.remaining,
            )
        )
    return truths


def scene_bounds(
    script: ScenarioScript, parcels: list[ParcelTruth]
) -> tuple[float, float, float, float]:
    """Bounds of all parcels padded by one gap on every side."""
    minx = min(p.bounds[0] for p in parcels) - script.gap
    miny = min(p.bounds[1] for p in parcels) - script.gap
    maxx = max(p.bounds[2] for p in parcels) + script.gap
    maxy = max(p.bounds[3] for p in parcels) + script.gap
    return (minx, miny, maxx, maxy)


def extent_polygons(
    script: ScenarioScript, parcels: list[ParcelTruth], year_index: int
) -> list[Polygon]:
    """Urban-village footprint of one year, one polygon per detected parcel."""
    polygons = []
    for parcel in parcels:
        minx, miny, maxx, maxy = parcel.bounds
        category = parcel.sequence[year_index]
        if category is UV:
            shift = script.jitter if year_index > 0 else 0.0
            polygons.append(box(minx + shift, miny, maxx + shift, maxy))
        elif category is INCOMPLETE:
            polygons.append(
                box(minx, miny, minx + parcel.remaining * (maxx - minx), maxy)
            )
    return polygons


def truth_matrix(
    parcels: list[ParcelTruth], from_index: int, to_index: int, period: tuple[int, int]
) -> TransitionMatrix:
    contributions: dict[tuple[int, int], list[float]] = {}
    for parcel in parcels:
        key = (
            parcel.sequence[from_index].code - 1,
            parcel.sequence[to_index].code - 1,
        )
        contributions.setdefault(key, []).append(parcel.area)
    cells = np.zeros((len(CATEGORIES), len(CATEGORIES)))
    for (i, j), areas in contributions.items():
        cells[i, j] = math.fsum(areas)
    return TransitionMatrix(period, cells)


def _pois_for_year(
    script: ScenarioScript,
    parcels: list[ParcelTruth],
    year_index: int,
    rng: np.random.Generator,
    bounds: tuple[float, float, float, float] | None,
) -> pd.DataFrame:
    rows = []
    for parcel in parcels:
        category = parcel.sequence[year_index]
        if category not in POI_CHOICES:
            continue
        minx, miny, maxx, maxy = parcel.bounds
        for _ in range(script.spawn.pois_per_parcel):
            choices = POI_CHOICES[category]
            rows.append(
                {
                    "x": float(rng.uniform(minx + POI_INSET, maxx - POI_INSET)),
                    "y": float(rng.uniform(miny + POI_INSET, maxy - POI_INSET)),
                    "category": choices[int(rng.integers(len(choices)))],
                }
            )
    if bounds is not None:
        for _ in range(script.spawn.noise_pois):
            rows.append(
                {
                    "x": float(rng.uniform(bounds[0], bounds[2])),
                    "y": float(rng.uniform(bounds[1], bounds[3])),
                    "category": "other",
                }
            )
    return pd.DataFrame(rows, columns=["x", "y", "category"])


def _osm_for_year(
    script: ScenarioScript,
    parcels: list[ParcelTruth],
    year_index: int,
    bounds: tuple[float, float, float, float] | None,
) -> list[Feature]:
    features = []
    if script.spawn.osm_for_stable:
        for parcel in parcels:
            tags = OSM_TAGS.get(parcel.sequence[year_index])
            if tags is not None:
                features.append(Feature(box(*parcel.bounds), {"tags": tags}))
    if bounds is not None:
        # One street along the middle of every horizontal gap.
        step = script.parcel_size + script.gap
        rows = math.ceil(len(parcels) / script.columns)
        for row in range(1, rows):
            y = script.origin[1] + row * step - script.gap / 2
            features.append(
                Feature(
                    LineString([(bounds[0], y), (bounds[2], y)]),
                    {"tags": {"highway": "residential"}},
                )
            )
    return features


def _imagery_for_year(
    parcels: list[ParcelTruth], year_index: int, grid: AffineGrid, crs: ProjectedCrs
) -> np.ndarray:
    image = np.full(grid.shape, BACKGROUND_LUMINANCE, dtype=np.uint8)
    rows, cols = np.indices(grid.shape)
    checkerboard = np.where(
        (rows + cols) % 2 == 0, *CONSTRUCTION_LUMINANCE
    ).astype(np.uint8)
    for parcel in parcels:
        category = parcel.sequence[year_index]
        if category not in TRANSITIONAL_CATEGORIES:
            continue
        inside = rasterize(
            PolygonSet.from_polygons([box(*parcel.bounds)], crs), grid
        ).bits.astype(bool)
        if category is LandUseCategory.VacantLand:
            image[inside] = VACANT_LUMINANCE
        else:
            image[inside] = checkerboard[inside]
    return image


def _zones(
    script: ScenarioScript, bounds: tuple[float, float, float, float]
) -> list[Feature]:
    """Vertical strips of equal width over the scene."""
    minx, miny, maxx, maxy = bounds
    width = (maxx - minx) / script.zone_count
    return [
        Feature(
            box(minx + i * width, miny, minx + (i + 1) * width, maxy),
            {"id": f"z{i + 1:03d}", "name": f"Zone {i + 1}"},
        )
        for i in range(script.zone_count)
    ]


def _truth_frame(script: ScenarioScript, parcels: list[ParcelTruth]) -> pd.DataFrame:
    year_columns = [f"category_{year}" for year in script.timeline]
    rows = [
        {
            "parcel_id": parcel.id,
            "area_m2": parcel.area,
            "phase": parcel.phase.value,
            "pathway": parcel.pathway.value if parcel.pathway else "",
            **{
                column: category.value
                for column, category in zip(year_columns, parcel.sequence, strict=True)
            },
        }
        for parcel in parcels
    ]
    return pd.DataFrame(
        rows, columns=["parcel_id", "area_m2", "phase", "pathway", *year_columns]
    )


def generate_scenario(script: ScenarioScript, out_dir: pathlib.Path) -> ScenarioBundle:
    """Write a complete fixture bundle, including a runnable `config.yaml`.

    The same script and seed always produce the same files.

    Args:
        script: Validated scenario script.
        out_dir: Destination directory; created when missing.

    Returns:
        The bundle with its ground-truth parcels and transition matrices.
    """
    rng = np.random.default_rng(script.seed)
    crs = ProjectedCrs.from_user_input(script.crs)
    parcels = lay_out_parcels(script, rng)
    bounds = scene_bounds(script, parcels) if parcels else None
    grid = AffineGrid.covering(bounds, script.pixel_size) if bounds else None

    years_config: dict[int, dict[str, str]] = {}
    for year_index, year in enumerate(script.timeline):
        entry: dict[str, str] = {}
        polygons = extent_polygons(script, parcels, year_index)
        extent = PolygonSet.from_polygons(polygons, crs)
        snapshot_path = out_dir / "snapshots" / f"uv_{year}.geojson"
        write_features(
            snapshot_path,
            [Feature(polygon, {"year": year}) for polygon in polygons],
            crs,
        )
        if grid is not None:
            mask_path = out_dir / "masks" / f"uv_{year}.tif"
            write_mask(mask_path, rasterize(extent, grid), crs)
        if script.extent_source == "mask" and grid is not None:
            entry["mask"] = f"masks/uv_{year}.tif"
        else:
            entry["snapshot"] = f"snapshots/uv_{year}.geojson"

        atomic_write_csv(
            out_dir / "pois" / f"pois_{year}.csv",
            _pois_for_year(script, parcels, year_index, rng, bounds),
        )
        entry["pois"] = f"pois/pois_{year}.csv"
        write_features(
            out_dir / "osm" / f"osm_{year}.geojson",
            _osm_for_year(script, parcels, year_index, bounds),
            crs,
        )
        entry["osm"] = f"osm/osm_{year}.geojson"
        if grid is not None:
            write_raster(
                out_dir / "imagery" / f"imagery_{year}.tif",
                _imagery_for_year(parcels, year_index, grid, crs),
                grid,
                crs,
            )
            entry["imagery"] = f"imagery/imagery_{year}.tif"
        years_config[year] = entry

    config: dict = {
        "city": script.city,
        "crs": str(crs),
        "timeline": list(script.timeline),
        "years": years_config,
    }
    if bounds is not None and script.zone_count:
        write_features(out_dir / "zones.geojson", _zones(script, bounds), crs)
        config["zones"] = "zones.geojson"
    config["parameters"] = {"seed": script.seed}
    config["output_dir"] = "output"
    config_path = write_yaml(out_dir / "config.yaml", config)

    atomic_write_csv(out_dir / "truth" / "parcels.csv", _truth_frame(script, parcels))
    matrices = []
    for from_index, (from_year, to_year) in enumerate(
        zip(script.timeline, script.timeline[1:], strict=False)
    ):
        matrix = truth_matrix(
            parcels, from_index, from_index + 1, (from_year, to_year)
        )
        write_matrix_csv(
            out_dir / "truth" / f"transitions_{from_year}_{to_year}.csv", matrix
        )
        matrices.append(matrix)

    logger.info(
        "Generated %d parcels over %d years in %s",
        len(parcels),
        len(script.timeline),
        out_dir,
    )
    return ScenarioBundle(out_dir, config_path, parcels, matrices)
