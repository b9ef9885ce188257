from collections.abc import Iterator
from dataclasses import dataclass

from uvlife.exception import UvlUserError


@dataclass(frozen=True)
class Timeline:
    """Observation years T1 < T2 < ... (three in the common case)."""

    years: tuple[int, ...]

    def __post_init__(self) -> None:
        years = tuple(int(year) for year in self.years)
        if len(years) < 2:
            message = f"A timeline needs at least two years, got {list(years)}."
            raise UvlUserError(message)
        if any(b <= a for a, b in zip(years, years[1:], strict=False)):
            message = f"Timeline years must be strictly increasing, got {list(years)}."
            raise UvlUserError(message)
        object.__setattr__(self, "years", years)

    @classmethod
    def parse(cls, text: str) -> "Timeline":
        """Parse `2015,2019,2023`."""
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            message = f"`{text}` is not a comma-separated list of years."
            raise UvlUserError(message) from e

    @property
    def first(self) -> int:
        return self.years[0]

    @property
    def last(self) -> int:
        return self.years[-1]

    @property
    def periods(self) -> list[tuple[int, int]]:
        """Consecutive (from_year, to_year) pairs."""
        return list(zip(self.years, self.years[1:], strict=False))

    def __iter__(self) -> Iterator[int]:
        return iter(self.years)

    def __len__(self) -> int:
        return len(self.years)
