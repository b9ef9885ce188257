"""Percentages and per-year area accounting."""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from uvlife.exception import UvlUserError
from uvlife.geo.polygon_set import difference
from uvlife.lifecycle.categories import LandUseCategory, Pathway, PhaseLabel
from uvlife.lifecycle.parcels import LifecycleParcel
from uvlife.postproc.snapshot import UVSnapshot, check_snapshot_years

from .matrix import TransitionMatrix

CENT = Decimal("0.01")


def round_half_up(value: float | Decimal, quantum: Decimal = CENT) -> float:
    return float(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def percentage(part: float, whole: float) -> float | None:
    """`100 * part / whole` rounded half-up to two decimals; None when whole is 0."""
    if whole == 0:
        return None
    ratio = Decimal(str(part)) * 100 / Decimal(str(whole))
    return round_half_up(ratio)


def remaining_share(area_final: float, area_initial: float) -> float:
    """Share of the initial urban-village area still standing, in percent.

    Example:
        ```py
        remaining_share(1.95, 38.56)  # 5.06
        ```
    """
    if area_initial <= 0:
        message = f"The initial area must be positive, got {area_initial}."
        raise UvlUserError(message)
    if area_final < 0:
        message = f"The final area cannot be negative, got {area_final}."
        raise UvlUserError(message)
    share = percentage(area_final, area_initial)
    assert share is not None
    return share


@dataclass(frozen=True)
class YearArea:
    year: int
    area_m2: float
    area_km2: float
    demolished_since_prior_m2: float | None


def area_timeline(snapshots: Sequence[UVSnapshot]) -> list[YearArea]:
    """Urban-village area per year and the area lost since the previous year."""
    check_snapshot_years(list(snapshots))
    rows = []
    previous = None
    for snapshot in snapshots:
        lost = (
            None
            if previous is None
            else difference(previous.extent, snapshot.extent).area
        )
        rows.append(
            YearArea(
                year=snapshot.year,
                area_m2=snapshot.extent.area,
                area_km2=round_half_up(snapshot.extent.area / 1e6),
                demolished_since_prior_m2=lost,
            )
        )
        previous = snapshot
    return rows


@dataclass(frozen=True)
class CategoryShare:
    category: LandUseCategory
    area_m2: float
    share_of_baseline: float | None
    share_of_demolished: float | None


@dataclass(frozen=True)
class CategoryShares:
    """Per-category area at the to-year under two normalizations.

    `share_of_baseline` divides by the baseline urban-village area,
    `share_of_demolished` by the area no longer an urban village.
    """

    period: tuple[int, int]
    baseline_area: float
    demolished_area: float
    rows: list[CategoryShare]

    @property
    def vacancy_rate(self) -> float | None:
        """VacantLand as a percentage of the demolished area."""
        for row in self.rows:
            if row.category is LandUseCategory.VacantLand:
                return row.share_of_demolished
        return None


def category_shares(
    matrix: TransitionMatrix, baseline_area: float | None = None
) -> CategoryShares:
    """Shares of every category at the matrix's to-year.

    Args:
        matrix: Transition matrix of one period.
        baseline_area: Denominator of the baseline normalization; defaults to the
            matrix total, which is the study universe.
    """
    totals = matrix.column_totals()
    baseline = matrix.total if baseline_area is None else baseline_area
    demolished = math.fsum(
        area
        for category, area in totals.items()
        if category is not LandUseCategory.UrbanVillage
    )
    rows = [
        CategoryShare(
            category=category,
            area_m2=area,
            share_of_baseline=percentage(area, baseline),
            share_of_demolished=(
                None
                if category is LandUseCategory.UrbanVillage
                else percentage(area, demolished)
            ),
        )
        for category, area in totals.items()
    ]
    return CategoryShares(matrix.period, baseline, demolished, rows)


def phase_areas(parcels: Iterable[LifecycleParcel]) -> dict[PhaseLabel, float]:
    areas: dict[PhaseLabel, list[float]] = {phase: [] for phase in PhaseLabel}
    for parcel in parcels:
        areas[parcel.phase].append(parcel.area)
    return {phase: math.fsum(values) for phase, values in areas.items()}


def pathway_areas(parcels: Iterable[LifecycleParcel]) -> dict[Pathway, float]:
    """Area of non-remained parcels per transformation pathway."""
    areas: dict[Pathway, list[float]] = {pathway: [] for pathway in Pathway}
    for parcel in parcels:
        pathway = parcel.pathway
        if pathway is not None:
            areas[pathway].append(parcel.area)
    return {pathway: math.fsum(values) for pathway, values in areas.items()}


def pathway_shares(areas: dict[Pathway, float]) -> dict[Pathway, float | None]:
    total = math.fsum(areas.values())
    return {pathway: percentage(area, total) for pathway, area in areas.items()}
