import dataclasses
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from uvlife.exception import InconsistentSequenceError, UvlUserError
from uvlife.files import map_in_order
from uvlife.geo.polygon_set import PolygonSet, intersection

from .categories import AssignmentMethod, LandUseCategory, Pathway, PhaseLabel
from .extents import demolished_extent, detect_incomplete, study_universe
from .phases import assign_phase, check_sequence, classify_pathway
from .timeline import Timeline

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LifecycleParcel:
    """One parcel of the study universe with its category in every year.

    A category is `None` while the parcel still waits for land-use assignment.
    """

    id: str
    geometry: PolygonSet
    categories: dict[int, LandUseCategory | None]
    provenance: dict[int, AssignmentMethod | None]
    demolished_area: float = 0.0
    evidence: dict[int, str] = field(default_factory=dict)
    parent_id: str | None = None

    def __post_init__(self) -> None:
        if self.geometry.is_empty:
            message = f"Parcel {self.id} has an empty geometry."
            raise UvlUserError(message)

    @property
    def area(self) -> float:
        return self.geometry.area

    @property
    def years(self) -> list[int]:
        return sorted(self.categories)

    @property
    def pending_years(self) -> list[int]:
        return [year for year in self.years if self.categories[year] is None]

    @property
    def is_complete(self) -> bool:
        return not self.pending_years

    def sequence(self) -> list[LandUseCategory]:
        """Categories in year order; every year must be resolved."""
        if not self.is_complete:
            message = f"Parcel {self.id} has no category for {self.pending_years}."
            raise UvlUserError(message)
        return [self.category_at(year) for year in self.years]

    @property
    def phase(self) -> PhaseLabel:
        return assign_phase(self.sequence())

    @property
    def pathway(self) -> Pathway | None:
        return classify_pathway(self.sequence())

    def category_at(self, year: int) -> LandUseCategory:
        if year not in self.categories:
            message = f"Parcel {self.id} has no observation for {year}."
            raise UvlUserError(message)
        category = self.categories[year]
        if category is None:
            message = f"Parcel {self.id} has no category for {year}."
            raise UvlUserError(message)
        return category

    def with_category(
        self,
        year: int,
        category: LandUseCategory,
        method: AssignmentMethod,
        evidence: str | None = None,
    ) -> "LifecycleParcel":
        if year not in self.categories:
            message = f"Parcel {self.id} has no observation for {year}."
            raise UvlUserError(message)
        notes = dict(self.evidence)
        if evidence:
            notes[year] = evidence
        else:
            notes.pop(year, None)
        return dataclasses.replace(
            self,
            categories={**self.categories, year: category},
            provenance={**self.provenance, year: method},
            evidence=notes,
        )


def parcel_id(index: int) -> str:
    return f"p{index + 1:04d}"


def observe_parcel(
    identifier: str,
    geometry: PolygonSet,
    snapshots: Mapping[int, PolygonSet],
    timeline: Timeline,
    delta: float,
    demolished: PolygonSet,
) -> LifecycleParcel:
    """Label a parcel from boundary evidence alone.

    The first year is an urban village by construction. In later years the
    share `r` of the parcel still detected decides: `r > 1 - delta` keeps it an
    urban village, a shrunken remainder makes it an incomplete demolition, and
    `r = 0` leaves the year pending for land-use assignment.
    """
    categories: dict[int, LandUseCategory | None] = {}
    provenance: dict[int, AssignmentMethod | None] = {}
    for year in timeline:
        if year == timeline.first:
            category = LandUseCategory.UrbanVillage
        else:
            remaining = intersection(geometry, snapshots[year])
            if remaining.is_empty:
                category = None
            elif detect_incomplete(geometry, remaining, delta):
                category = LandUseCategory.IncompleteDemolition
            else:
                category = LandUseCategory.UrbanVillage
        categories[year] = category
        provenance[year] = AssignmentMethod.boundary_diff if category else None
    return LifecycleParcel(
        id=identifier,
        geometry=geometry,
        categories=categories,
        provenance=provenance,
        demolished_area=intersection(geometry, demolished).area,
    )


def build_parcels(
    snapshots: Mapping[int, PolygonSet],
    timeline: Timeline,
    delta: float = 0.3,
    jobs: int = 1,
) -> list[LifecycleParcel]:
    """Cut the study universe into parcels and label them from boundaries.

    Parcels are the connected components of the union of all years but the
    last, numbered `p0001`, `p0002`, ... by their lower-left corner.
    """
    universe = study_universe(snapshots, timeline)
    demolished = demolished_extent(snapshots, timeline)
    components = universe.components()
    logger.info(
        "Study universe: %d parcels, %.2f km2", len(components), universe.area / 1e6
    )
    return map_in_order(
        lambda item: observe_parcel(
            parcel_id(item[0]), item[1], snapshots, timeline, delta, demolished
        ),
        list(enumerate(components)),
        jobs,
    )


def find_inconsistent(
    parcels: list[LifecycleParcel],
) -> list[tuple[str, InconsistentSequenceError]]:
    """Parcels whose resolved years already break a sequence rule."""
    flagged = []
    for parcel in parcels:
        observed = [
            category
            for year in parcel.years
            if (category := parcel.categories[year]) is not None
        ]
        try:
            check_sequence(observed)
        except InconsistentSequenceError as e:
            flagged.append((parcel.id, e))
    return flagged
