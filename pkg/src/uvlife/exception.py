from dataclasses import dataclass, field


@dataclass
class UvlValidationError:
    location: tuple[str, ...]
    yaml_location: tuple[tuple[int, int], tuple[int, int]] | None
    message: str
    input: str


@dataclass
class UvlUserError(ValueError):
    message: str | None = field(default=None)

    def __str__(self) -> str:
        return self.message or ""


@dataclass
class UvlUserValidationError(ValueError):
    validation_errors: list[UvlValidationError]

    def __str__(self) -> str:
        return "; ".join(
            f"{'.'.join(error.location)}: {error.message}"
            for error in self.validation_errors
        )


@dataclass
class UvlStageError(RuntimeError):
    stage: str
    message: str
    entity_ids: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        suffix = f" [{', '.join(self.entity_ids)}]" if self.entity_ids else ""
        return f"Stage `{self.stage}` failed: {self.message}{suffix}"


@dataclass
class UvlInternalError(RuntimeError):
    message: str

    def __str__(self) -> str:
        return self.message


class GeometryValidationError(UvlUserError):
    pass


class CrsMismatchError(UvlUserError):
    pass


@dataclass
class InconsistentSequenceError(UvlUserError):
    rule: str | None = field(default=None)


@dataclass
class UnresolvedParcelsError(UvlUserError):
    parcel_ids: list[str] = field(default_factory=list)
