"""Vacant land versus construction site for cleared parcels.

Any callable taking an `ImageChip` and returning a `TransitionalVerdict` can
stand in for the built-in texture heuristic; verdicts produced elsewhere (a
deep classifier, manual interpretation) enter through
`import_transitional_labels`.
"""

import logging
import math
import pathlib
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np
import pandas as pd
import scipy.ndimage

from uvlife.exception import UvlUserError
from uvlife.geo.conversion import rasterize
from uvlife.geo.grid import AffineGrid
from uvlife.geo.polygon_set import PolygonSet
from uvlife.lifecycle.categories import TRANSITIONAL_CATEGORIES, LandUseCategory

logger = logging.getLogger(__name__)

MIN_CHIP_CELLS = 100
GRADIENT_THRESHOLD = 0.1
EDGE_DENSITY_LIMIT = 0.15
VARIANCE_LIMIT = 0.03
CONFIDENCE_SLOPE = 4.0

type VerdictSource = Literal["heuristic", "imported"]


@dataclass(frozen=True)
class TransitionalVerdict:
    category: LandUseCategory
    confidence: float | None
    source: VerdictSource
    origin: str | None = None

    def __post_init__(self) -> None:
        if self.category not in TRANSITIONAL_CATEGORIES:
            message = (
                f"A transitional verdict must be VacantLand or ConstructionSite, got"
                f" {self.category.value}."
            )
            raise UvlUserError(message)
        if self.confidence is not None and not 0 <= self.confidence <= 1:
            message = f"Confidence must lie in [0, 1], got {self.confidence}."
            raise UvlUserError(message)
        if self.source == "heuristic" and self.confidence is None:
            message = "Heuristic verdicts carry a confidence."
            raise UvlUserError(message)

    def describe(self) -> str:
        parts = [self.source]
        if self.confidence is not None:
            parts.append(f"confidence {self.confidence:.2f}")
        if self.origin:
            parts.append(f"from {self.origin}")
        return " ".join(parts)


@dataclass(frozen=True, eq=False)
class ImageChip:
    """Luminance in [0, 1] over a window; `mask` marks the parcel's cells."""

    grid: AffineGrid
    luminance: np.ndarray
    mask: np.ndarray | None = None

    def __post_init__(self) -> None:
        luminance = np.asarray(self.luminance, dtype=np.float64)
        if luminance.shape != self.grid.shape:
            message = (
                f"Chip luminance has shape {luminance.shape}, grid is"
                f" {self.grid.shape}."
            )
            raise UvlUserError(message)
        if not np.isfinite(luminance).all():
            message = "Chip luminance must be finite."
            raise UvlUserError(message)
        object.__setattr__(self, "luminance", luminance)
        mask = (
            np.ones(self.grid.shape, dtype=bool)
            if self.mask is None
            else np.asarray(self.mask, dtype=bool)
        )
        object.__setattr__(self, "mask", mask)

    @property
    def cell_count(self) -> int:
        return int(np.count_nonzero(self.mask))

    @classmethod
    def from_raster(
        cls, grid: AffineGrid, luminance: np.ndarray, parcel: PolygonSet
    ) -> "ImageChip | None":
        """Cut the parcel's window out of a yearly luminance raster."""
        window = grid.clip(parcel.bounds)
        if window is None:
            return None
        rows, cols = window.offset_in(grid)
        return cls(window, luminance[rows, cols], rasterize(parcel, window).bits)


type TransitionalClassifier = Callable[[ImageChip], TransitionalVerdict]


@dataclass(frozen=True)
class TextureFeatures:
    variance: float
    edge_density: float

    @property
    def margin(self) -> float:
        """Positive inside the construction-site region, negative outside."""
        return (
            max(
                self.edge_density / EDGE_DENSITY_LIMIT,
                self.variance / VARIANCE_LIMIT,
            )
            - 1
        )


def texture_features(chip: ImageChip) -> TextureFeatures:
    """Luminance variance and the share of cells with a 3x3 gradient above 0.1.

    The gradient magnitude of a cell is half the luminance range of its 3x3
    neighbourhood. Edge density is measured on cells whose whole neighbourhood
    lies inside the parcel, so neighbouring land does not leak in.
    """
    assert chip.mask is not None
    values = chip.luminance
    gradient = (
        scipy.ndimage.maximum_filter(values, size=3, mode="nearest")
        - scipy.ndimage.minimum_filter(values, size=3, mode="nearest")
    ) / 2
    interior = scipy.ndimage.binary_erosion(
        chip.mask, structure=np.ones((3, 3), dtype=bool), border_value=1
    )
    if not interior.any():
        interior = chip.mask
    return TextureFeatures(
        variance=float(np.var(values[chip.mask])),
        edge_density=float(np.mean(gradient[interior] > GRADIENT_THRESHOLD)),
    )


def heuristic_transitional(chip: ImageChip) -> TransitionalVerdict:
    """Texture rule: busy or high-contrast ground is a construction site.

    ConstructionSite when the edge density reaches 0.15 or the variance reaches
    0.03, otherwise VacantLand. Confidence is a logistic function of the
    distance from that boundary and is 0.5 on it.

    Example:
        ```py
        flat = ImageChip(grid, np.full(grid.shape, 0.4))
        heuristic_transitional(flat).category  # LandUseCategory.VacantLand
        ```
    """
    if chip.cell_count < MIN_CHIP_CELLS:
        message = (
            f"The image chip has {chip.cell_count} cells; at least {MIN_CHIP_CELLS}"
            " are needed. Import transitional labels for this parcel instead."
        )
        raise UvlUserError(message)
    features = texture_features(chip)
    margin = features.margin
    category = (
        LandUseCategory.ConstructionSite if margin >= 0 else LandUseCategory.VacantLand
    )
    confidence = 1 / (1 + math.exp(-CONFIDENCE_SLOPE * abs(margin)))
    logger.debug(
        "Texture variance %.4f, edge density %.3f -> %s",
        features.variance,
        features.edge_density,
        category.value,
    )
    return TransitionalVerdict(category, confidence, "heuristic")


LABEL_COLUMNS = ("parcel_id", "category", "confidence")


def import_transitional_labels(
    path: pathlib.Path, known_parcel_ids: Iterable[str] | None = None
) -> dict[str, TransitionalVerdict]:
    """Read `parcel_id,category,confidence` rows produced by an external classifier.

    The header row is optional and `confidence` may be blank. Repeating an
    identical row is harmless; two different verdicts for one parcel are not.

    Example:
        ```py
        # labels.csv: p17,ConstructionSite,0.97
        import_transitional_labels(pathlib.Path("labels.csv"))["p17"].confidence
        # 0.97
        ```

    Args:
        path: CSV file.
        known_parcel_ids: When given, every imported id must be one of these.

    Returns:
        Verdicts keyed by parcel id.
    """
    try:
        frame = pd.read_csv(
            path,
            header=None,
            names=list(LABEL_COLUMNS),
            dtype=str,
            keep_default_na=False,
            skipinitialspace=True,
            comment="#",
        )
    except pd.errors.EmptyDataError:
        return {}
    frame = frame.fillna("")
    if not frame.empty and frame.iloc[0]["parcel_id"].strip() == "parcel_id":
        frame = frame.iloc[1:]

    verdicts: dict[str, TransitionalVerdict] = {}
    for row_number, (parcel_id, category_name, confidence_text) in enumerate(
        frame.itertuples(index=False), start=1
    ):
        parcel_id = parcel_id.strip()
        try:
            category = LandUseCategory(category_name.strip())
            confidence = (
                float(confidence_text) if confidence_text.strip() != "" else None
            )
        except ValueError as e:
            message = (
                f"{path}, row {row_number}: cannot read `{category_name}` /"
                f" `{confidence_text}` as a category and a confidence."
            )
            raise UvlUserError(message) from e
        verdict = TransitionalVerdict(category, confidence, "imported", path.name)
        if parcel_id in verdicts and verdicts[parcel_id] != verdict:
            message = f"{path}: conflicting labels for parcel `{parcel_id}`."
            raise UvlUserError(message)
        verdicts[parcel_id] = verdict

    if known_parcel_ids is not None:
        unknown = sorted(set(verdicts) - set(known_parcel_ids))
        if unknown:
            message = f"{path} labels unknown parcels: {', '.join(unknown)}."
            raise UvlUserError(message)
    logger.info("Imported %d transitional labels from %s", len(verdicts), path)
    return verdicts
