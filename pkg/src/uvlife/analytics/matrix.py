"""Area transition matrices between the seven land-use categories."""

import math
import pathlib
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
import pandas as pd

from uvlife.exception import UvlUserError
from uvlife.files import atomic_write_csv
from uvlife.lifecycle.categories import LandUseCategory
from uvlife.lifecycle.parcels import LifecycleParcel

CATEGORIES = tuple(LandUseCategory)


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """`cells[a, b]` is the area (m2) labeled `a` at `period[0]` and `b` at `period[1]`.

    Rows and columns follow the category code order.
    """

    period: tuple[int, int]
    cells: np.ndarray

    def __post_init__(self) -> None:
        cells = np.array(self.cells, dtype=np.float64, copy=True)
        size = len(CATEGORIES)
        if cells.shape != (size, size):
            message = f"A transition matrix is {size}x{size}, got {cells.shape}."
            raise UvlUserError(message)
        if (cells < 0).any():
            message = "Transition matrix cells cannot be negative."
            raise UvlUserError(message)
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "period", tuple(self.period))

    @property
    def from_year(self) -> int:
        return self.period[0]

    @property
    def to_year(self) -> int:
        return self.period[1]

    @property
    def total(self) -> float:
        return math.fsum(self.cells.ravel())

    def cell(self, source: LandUseCategory, target: LandUseCategory) -> float:
        return float(self.cells[source.code - 1, target.code - 1])

    def row_totals(self) -> dict[LandUseCategory, float]:
        """Area per category at the from-year."""
        return {
            category: math.fsum(self.cells[index])
            for index, category in enumerate(CATEGORIES)
        }

    def column_totals(self) -> dict[LandUseCategory, float]:
        """Area per category at the to-year."""
        return {
            category: math.fsum(self.cells[:, index])
            for index, category in enumerate(CATEGORIES)
        }

    def rows(self) -> list[dict[str, str | float]]:
        return [
            {
                "from_category": source.value,
                "to_category": target.value,
                "area_m2": float(self.cells[i, j]),
            }
            for i, source in enumerate(CATEGORIES)
            for j, target in enumerate(CATEGORIES)
        ]


def build_matrix(
    parcels: Iterable[LifecycleParcel], from_year: int, to_year: int
) -> TransitionMatrix:
    """Sum parcel areas by their (from-year, to-year) category pair.

    Cells are accumulated with `math.fsum`, so the result does not depend on the
    order of `parcels`.
    """
    if to_year <= from_year:
        message = f"The period must move forward in time, got {from_year}-{to_year}."
        raise UvlUserError(message)
    contributions: dict[tuple[int, int], list[float]] = {}
    for parcel in parcels:
        for year in (from_year, to_year):
            if parcel.categories.get(year) is None:
                message = f"Parcel {parcel.id} has no category for {year}."
                raise UvlUserError(message)
        key = (
            parcel.category_at(from_year).code - 1,
            parcel.category_at(to_year).code - 1,
        )
        contributions.setdefault(key, []).append(parcel.area)

    cells = np.zeros((len(CATEGORIES), len(CATEGORIES)), dtype=np.float64)
    for (i, j), areas in contributions.items():
        cells[i, j] = math.fsum(areas)
    return TransitionMatrix((from_year, to_year), cells)


def matrix_frame(matrix: TransitionMatrix) -> pd.DataFrame:
    return pd.DataFrame(
        matrix.rows(), columns=["from_category", "to_category", "area_m2"]
    )


def write_matrix_csv(path: pathlib.Path, matrix: TransitionMatrix) -> pathlib.Path:
    return atomic_write_csv(path, matrix_frame(matrix))


def read_matrix_csv(path: pathlib.Path, period: tuple[int, int]) -> TransitionMatrix:
    frame = pd.read_csv(path)
    missing = {"from_category", "to_category", "area_m2"} - set(frame.columns)
    if missing:
        message = f"{path} lacks the columns {sorted(missing)}."
        raise UvlUserError(message)
    cells = np.zeros((len(CATEGORIES), len(CATEGORIES)), dtype=np.float64)
    for row in frame.to_dict("records"):
        try:
            source = LandUseCategory(row["from_category"])
            target = LandUseCategory(row["to_category"])
        except ValueError as e:
            message = f"{path}: unknown category in row {row}."
            raise UvlUserError(message) from e
        cells[source.code - 1, target.code - 1] += float(row["area_m2"])
    return TransitionMatrix(period, cells)
