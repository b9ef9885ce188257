from collections.abc import Sequence

from uvlife.exception import InconsistentSequenceError

from .categories import (
    DEMOLISHED_CATEGORIES,
    STABLE_CATEGORIES,
    LandUseCategory,
    Pathway,
    PhaseLabel,
)

UV = LandUseCategory.UrbanVillage
INCOMPLETE = LandUseCategory.IncompleteDemolition


def check_sequence(categories: Sequence[LandUseCategory]) -> None:
    """Raise `InconsistentSequenceError` when a category sequence is impossible.

    Rules:
        - The first observation is an urban village.
        - An urban village never comes back once the parcel left that state.
        - Incomplete demolition only follows an urban village or itself.
    """
    if not categories:
        message = "A parcel needs at least one observed category."
        raise InconsistentSequenceError(message, rule="non-empty")
    if categories[0] is not UV:
        message = f"First category is {categories[0].value}, not UrbanVillage."
        raise InconsistentSequenceError(message, rule="starts-as-urban-village")
    for index in range(1, len(categories)):
        previous, current = categories[index - 1], categories[index]
        if current is UV and previous is not UV:
            message = (
                f"UrbanVillage reappears after {previous.value} at observation"
                f" {index + 1}."
            )
            raise InconsistentSequenceError(message, rule="no-urban-village-return")
        if current is INCOMPLETE and previous not in (UV, INCOMPLETE):
            message = (
                f"IncompleteDemolition follows {previous.value} at observation"
                f" {index + 1}."
            )
            raise InconsistentSequenceError(message, rule="incomplete-follows-village")


def assign_phase(categories: Sequence[LandUseCategory]) -> PhaseLabel:
    """Lifecycle phase implied by a parcel's category sequence.

    Example:
        ```py
        assign_phase([UV, UV, UV])  # Remained
        assign_phase([UV, VacantLand, Buildings])  # Redeveloped
        assign_phase([UV, UV, ConstructionSite])  # Demolished
        ```
    """
    check_sequence(categories)
    final = categories[-1]
    if final is UV:
        return PhaseLabel.Remained
    if final in DEMOLISHED_CATEGORIES:
        return PhaseLabel.Demolished
    assert final in STABLE_CATEGORIES
    return PhaseLabel.Redeveloped


def classify_pathway(categories: Sequence[LandUseCategory]) -> Pathway | None:
    """Transformation pathway of a parcel that left the urban-village state.

    `gradual` parcels pass through incomplete demolition, `delayed` ones sit as
    vacant land at some observation, the rest are `synchronized`. Remained
    parcels have no pathway.
    """
    if assign_phase(categories) is PhaseLabel.Remained:
        return None
    if INCOMPLETE in categories:
        return Pathway.gradual
    if LandUseCategory.VacantLand in categories:
        return Pathway.delayed
    return Pathway.synchronized
