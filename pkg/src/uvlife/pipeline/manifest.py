"""Run manifests: effective parameters, input digests and package versions.

Manifests hold no timestamps or timings, so identical runs write identical
bytes.
"""

import importlib.metadata
import pathlib
from dataclasses import dataclass, field
from typing import Any

from uvlife import __version__
from uvlife.files import file_digest
from uvlife.schema.models.run_config import RunConfig

MANIFEST_FILE_NAME = "manifest.json"
RECORDED_PACKAGES = (
    "numpy",
    "pandas",
    "pydantic",
    "pyproj",
    "rasterio",
    "scipy",
    "shapely",
)


@dataclass
class StageRecord:
    name: str
    status: str = "ok"
    outputs: list[str] = field(default_factory=list)
    message: str | None = None
    entity_ids: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        record: dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "outputs": sorted(self.outputs),
        }
        if self.message is not None:
            record["message"] = self.message
            record["entity_ids"] = self.entity_ids
        return record


def package_versions() -> dict[str, str]:
    versions = {"uvlife": __version__}
    for package in RECORDED_PACKAGES:
        try:
            versions[package] = importlib.metadata.version(package)
        except importlib.metadata.PackageNotFoundError:
            versions[package] = "not installed"
    return versions


def display_path(path: pathlib.Path, base_dir: pathlib.Path | None) -> str:
    """`path` relative to `base_dir` in POSIX form when it lies below it."""
    if base_dir is not None:
        try:
            return path.resolve().relative_to(base_dir.resolve()).as_posix()
        except ValueError:
            pass
    return path.as_posix()


def input_paths(config: RunConfig) -> list[pathlib.Path]:
    """Every file a run reads, in a stable order."""
    paths: list[pathlib.Path] = []
    for year in sorted(config.years):
        inputs = config.years[year]
        for name in type(inputs).model_fields:
            value = getattr(inputs, name)
            if value is not None:
                paths.append(value)
    for value in (
        config.zones,
        config.manual_labels,
        config.alignment_overrides,
        config.tag_mapping,
    ):
        if value is not None:
            paths.append(value)
    return paths


def input_digests(
    config: RunConfig, base_dir: pathlib.Path | None
) -> dict[str, str]:
    return {
        display_path(path, base_dir): file_digest(path)
        for path in input_paths(config)
    }


def output_digests(root: pathlib.Path) -> dict[str, str]:
    return {
        path.relative_to(root).as_posix(): file_digest(path)
        for path in sorted(root.rglob("*"))
        if path.is_file()
    }


def build_manifest(
    config: RunConfig,
    base_dir: pathlib.Path | None,
    stages: list[StageRecord],
    outputs: dict[str, str],
    status: str,
) -> dict[str, Any]:
    return {
        "status": status,
        "city": config.city,
        "crs": config.crs,
        "timeline": config.timeline,
        "parameters": config.parameters.model_dump(mode="json"),
        "inputs": input_digests(config, base_dir),
        "packages": package_versions(),
        "stages": [stage.as_dict() for stage in stages],
        "outputs": outputs,
    }
