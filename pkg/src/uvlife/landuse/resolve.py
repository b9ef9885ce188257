"""Fill every pending parcel-year with a land-use category.

Evidence is consulted in a fixed order: a manual label, OSM area above the
coverage gate, POI counts, the dominant class of a category raster, an imported
transitional label, and finally the transitional classifier on imagery.
"""

import logging
import pathlib
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from uvlife.exception import UnresolvedParcelsError, UvlUserError
from uvlife.files import map_in_order
from uvlife.geo.grid import AffineGrid, CategoryRaster
from uvlife.lifecycle.categories import (
    STABLE_CATEGORIES,
    TRANSITIONAL_CATEGORIES,
    AssignmentMethod,
    LandUseCategory,
)
from uvlife.lifecycle.parcels import LifecycleParcel

from .assignment import EvidenceIndex
from .dominant import dominant_category
from .mixed import DEFAULT_MIXED_USE_THRESHOLD, split_mixed_use
from .transitional import (
    ImageChip,
    TransitionalClassifier,
    TransitionalVerdict,
    heuristic_transitional,
)

logger = logging.getLogger(__name__)

type ManualLabels = Mapping[tuple[str, int], LandUseCategory]

RASTER_CATEGORY_NAMES = frozenset(
    category.value for category in (*TRANSITIONAL_CATEGORIES, *STABLE_CATEGORIES)
)


@dataclass(frozen=True, eq=False)
class LuminanceRaster:
    grid: AffineGrid
    values: np.ndarray


@dataclass(frozen=True, eq=False)
class YearEvidence:
    """Everything known about one observation year besides the boundaries."""

    index: EvidenceIndex | None = None
    category_raster: CategoryRaster | None = None
    imagery: LuminanceRaster | None = None
    labels: Mapping[str, TransitionalVerdict] = field(default_factory=dict)


@dataclass(frozen=True)
class ResolverSettings:
    mixed_use_split: bool = False
    mixed_use_threshold: float = DEFAULT_MIXED_USE_THRESHOLD
    classifier: TransitionalClassifier = heuristic_transitional


@dataclass(frozen=True)
class Resolution:
    category: LandUseCategory
    method: AssignmentMethod
    evidence: str


def _label_for(
    parcel: LifecycleParcel, labels: Mapping[str, TransitionalVerdict]
) -> TransitionalVerdict | None:
    if parcel.id in labels:
        return labels[parcel.id]
    if parcel.parent_id is not None:
        return labels.get(parcel.parent_id)
    return None


def resolve_year(
    parcel: LifecycleParcel,
    evidence: YearEvidence,
    settings: ResolverSettings,
) -> Resolution | str:
    """Best category for one pending year, or the reason none was found."""
    if evidence.index is not None:
        assessment = evidence.index.assess(parcel.geometry)
        if assessment.category is not None:
            return Resolution(
                assessment.category, AssignmentMethod.poi_osm, assessment.evidence
            )

    raster = evidence.category_raster
    if raster is not None:
        code = dominant_category(raster, parcel.geometry)
        name = raster.legend.get(code) if code is not None else None
        if name in RASTER_CATEGORY_NAMES:
            return Resolution(
                LandUseCategory(name),
                AssignmentMethod.raster_classifier,
                "dominant pixel",
            )

    verdict = _label_for(parcel, evidence.labels)
    if verdict is not None:
        return Resolution(
            verdict.category, AssignmentMethod.raster_classifier, verdict.describe()
        )

    if evidence.imagery is None:
        return "no evidence and no imagery"
    chip = ImageChip.from_raster(
        evidence.imagery.grid, evidence.imagery.values, parcel.geometry
    )
    if chip is None:
        return "parcel lies outside the imagery"
    try:
        verdict = settings.classifier(chip)
    except UvlUserError as e:
        return str(e)
    return Resolution(
        verdict.category, AssignmentMethod.raster_classifier, verdict.describe()
    )


def resolve_parcel(
    parcel: LifecycleParcel,
    evidence_by_year: Mapping[int, YearEvidence],
    manual: ManualLabels,
    settings: ResolverSettings,
) -> tuple[list[LifecycleParcel], list[str]]:
    """Resolve one parcel, splitting it first when mixed use applies.

    Returns:
        The parcel or its children, and `id (year): reason` notes for years that
        stay unresolved.
    """
    final_year = parcel.years[-1]
    final_evidence = evidence_by_year.get(final_year, YearEvidence())
    parts = [parcel]
    if (
        settings.mixed_use_split
        and final_year in parcel.pending_years
        and (parcel.id, final_year) not in manual
        and final_evidence.index is not None
    ):
        parts = split_mixed_use(
            parcel, final_year, final_evidence.index, settings.mixed_use_threshold
        )

    resolved, unresolved = [], []
    for part in parts:
        for year in part.years:
            if (part.id, year) in manual:
                part = part.with_category(
                    year, manual[(part.id, year)], AssignmentMethod.manual
                )
                continue
            if part.categories[year] is not None:
                continue
            outcome = resolve_year(
                part, evidence_by_year.get(year, YearEvidence()), settings
            )
            if isinstance(outcome, Resolution):
                part = part.with_category(
                    year, outcome.category, outcome.method, outcome.evidence
                )
            else:
                unresolved.append(f"{part.id} ({year}): {outcome}")
        resolved.append(part)
    return resolved, unresolved


def resolve_parcels(
    parcels: list[LifecycleParcel],
    evidence_by_year: Mapping[int, YearEvidence],
    manual: ManualLabels | None = None,
    settings: ResolverSettings | None = None,
    jobs: int = 1,
) -> list[LifecycleParcel]:
    """Assign a land-use category to every pending parcel-year.

    Manual labels always win, also over boundary-derived categories.

    Raises:
        UnresolvedParcelsError: Some parcel-years have no usable evidence. The
            error lists them so labels can be imported or added by hand.
    """
    manual = manual or {}
    settings = settings or ResolverSettings()

    known = {(parcel.id, year) for parcel in parcels for year in parcel.years}
    unknown = sorted(
        f"{parcel_id} ({year})"
        for parcel_id, year in manual
        if (parcel_id, year) not in known and "." not in parcel_id
    )
    if unknown:
        message = f"Manual labels refer to unknown parcel-years: {', '.join(unknown)}."
        raise UvlUserError(message)

    outcomes = map_in_order(
        lambda parcel: resolve_parcel(parcel, evidence_by_year, manual, settings),
        parcels,
        jobs,
    )
    resolved = [part for parts, _ in outcomes for part in parts]
    unresolved = [note for _, notes in outcomes for note in notes]
    if unresolved:
        ids = sorted({note.split(" ", 1)[0] for note in unresolved})
        message = (
            f"{len(ids)} parcels have years without a land-use category:"
            f" {'; '.join(unresolved)}. Add transitional labels or manual labels."
        )
        raise UnresolvedParcelsError(message, parcel_ids=ids)
    logger.info("Resolved land use for %d parcels", len(resolved))
    return resolved


def read_manual_labels(path: pathlib.Path) -> dict[tuple[str, int], LandUseCategory]:
    """Read hand-verified `parcel_id,year,category` rows.

    Child parcels of a mixed-use split are addressed as `<parent>.<n>`.
    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, comment="#")
    except pd.errors.EmptyDataError:
        return {}
    missing = [c for c in ("parcel_id", "year", "category") if c not in frame.columns]
    if missing:
        message = f"{path} lacks the columns {missing}."
        raise UvlUserError(message)

    labels: dict[tuple[str, int], LandUseCategory] = {}
    for row_number, row in enumerate(frame.to_dict("records"), start=2):
        try:
            key = (row["parcel_id"].strip(), int(row["year"]))
            category = LandUseCategory(row["category"].strip())
        except ValueError as e:
            message = f"{path}, line {row_number}: cannot read {row}."
            raise UvlUserError(message) from e
        if labels.get(key, category) is not category:
            message = f"{path}: conflicting labels for {key[0]} in {key[1]}."
            raise UvlUserError(message)
        labels[key] = category
    logger.info("Read %d manual labels from %s", len(labels), path)
    return labels
