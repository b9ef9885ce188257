import math
import pathlib
from collections.abc import Sequence
from dataclasses import dataclass

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_json
from uvlife.lifecycle.categories import LandUseCategory

from .matrix import CATEGORIES, TransitionMatrix

CHAIN_TOLERANCE = 1e-6


@dataclass(frozen=True)
class SankeyNode:
    year: int
    category: LandUseCategory
    area: float

    @property
    def key(self) -> str:
        return f"{self.year}:{self.category.value}"


@dataclass(frozen=True)
class SankeyLink:
    source: str
    target: str
    area: float


@dataclass(frozen=True)
class SankeyFlows:
    nodes: list[SankeyNode]
    links: list[SankeyLink]

    def as_dict(self) -> dict:
        return {
            "nodes": [
                {
                    "id": node.key,
                    "year": node.year,
                    "category": node.category.value,
                    "area_m2": node.area,
                }
                for node in self.nodes
            ],
            "links": [
                {"source": link.source, "target": link.target, "area_m2": link.area}
                for link in self.links
            ],
        }


def _check_chain(matrices: Sequence[TransitionMatrix]) -> None:
    for before, after in zip(matrices, matrices[1:], strict=False):
        if before.to_year != after.from_year:
            message = (
                f"Periods {before.period} and {after.period} do not chain; each"
                " period must start where the previous one ends."
            )
            raise UvlUserError(message)
        arriving = before.column_totals()
        leaving = after.row_totals()
        scale = max(before.total, after.total, 1.0)
        drifted = [
            category.value
            for category in CATEGORIES
            if abs(arriving[category] - leaving[category]) > CHAIN_TOLERANCE * scale
        ]
        if drifted:
            message = (
                f"Category areas at {before.to_year} differ between the periods"
                f" {before.period} and {after.period}: {drifted}."
            )
            raise UvlUserError(message)


def sankey_export(matrices: Sequence[TransitionMatrix]) -> SankeyFlows:
    """Nodes per (year, category) and one link per non-zero matrix cell.

    The first year has a single UrbanVillage node holding the baseline area.
    Later nodes carry the category totals of the year they belong to.
    """
    if not matrices:
        message = "At least one transition matrix is needed."
        raise UvlUserError(message)
    _check_chain(matrices)

    baseline = matrices[0].row_totals()
    stray = [
        category.value
        for category, area in baseline.items()
        if category is not LandUseCategory.UrbanVillage and area > 0
    ]
    if stray:
        message = (
            f"In {matrices[0].from_year} every parcel must be an urban village;"
            f" found {stray}."
        )
        raise UvlUserError(message)

    nodes = [
        SankeyNode(
            matrices[0].from_year,
            LandUseCategory.UrbanVillage,
            baseline[LandUseCategory.UrbanVillage],
        )
    ]
    links = []
    for matrix in matrices:
        nodes.extend(
            SankeyNode(matrix.to_year, category, area)
            for category, area in matrix.column_totals().items()
            if area > 0
        )
        for i, source in enumerate(CATEGORIES):
            for j, target in enumerate(CATEGORIES):
                area = float(matrix.cells[i, j])
                if area > 0:
                    links.append(
                        SankeyLink(
                            f"{matrix.from_year}:{source.value}",
                            f"{matrix.to_year}:{target.value}",
                            area,
                        )
                    )
    return SankeyFlows(nodes, links)


def write_sankey(path: pathlib.Path, flows: SankeyFlows) -> pathlib.Path:
    return atomic_write_json(path, flows.as_dict())


def node_totals(flows: SankeyFlows) -> dict[int, float]:
    totals: dict[int, list[float]] = {}
    for node in flows.nodes:
        totals.setdefault(node.year, []).append(node.area)
    return {year: math.fsum(areas) for year, areas in sorted(totals.items())}
