"""The five-stage batch run from yearly extents to reports.

Stages run serially: postprocess, align, lifecycle, landuse, analytics. Every
artifact is first written to a staging directory. A successful run moves the
staged files into the output directory and writes the manifest last; a failed
run moves them to `quarantine/` with a manifest describing the failure.
"""

import dataclasses
import logging
import pathlib
import shutil
import time
from collections.abc import Callable

import pandas as pd

from uvlife.analytics.matrix import TransitionMatrix, build_matrix, write_matrix_csv
from uvlife.analytics.report import PeriodSummary, ReportData, write_report
from uvlife.analytics.sankey import sankey_export, write_sankey
from uvlife.analytics.shares import (
    area_timeline,
    category_shares,
    pathway_areas,
    pathway_shares,
    phase_areas,
    remaining_share,
)
from uvlife.analytics.zonal import read_zones, write_zonal_csv, zonal_aggregate
from uvlife.exception import (
    UnresolvedParcelsError,
    UvlStageError,
    UvlUserError,
)
from uvlife.files import atomic_write_bytes, atomic_write_csv, atomic_write_json
from uvlife.geo.crs import require_same_crs
from uvlife.geo.io import (
    read_category_raster,
    read_features,
    read_mask,
    read_polygon_set,
    read_raster,
    to_unit_interval,
    write_polygon_set,
)
from uvlife.landuse.assignment import EvidenceIndex
from uvlife.landuse.evidence import read_osm, read_pois
from uvlife.landuse.resolve import (
    LuminanceRaster,
    ResolverSettings,
    YearEvidence,
    read_manual_labels,
    resolve_parcels,
)
from uvlife.landuse.transitional import import_transitional_labels
from uvlife.landuse.vocabulary import TagMapping, default_tag_mapping, read_tag_mapping
from uvlife.lifecycle.extents import LifecyclePartition, partition
from uvlife.lifecycle.io import read_parcels, write_parcels, write_parcels_csv
from uvlife.lifecycle.parcels import LifecycleParcel, build_parcels, find_inconsistent
from uvlife.postproc.alignment import (
    align_temporal,
    apply_manual_edits,
    manual_edits_from_features,
)
from uvlife.postproc.cleaning import clean_mask
from uvlife.postproc.snapshot import UVSnapshot
from uvlife.schema.models.run_config import RunConfig
from uvlife.schema.yaml_writer import dictionary_to_yaml

from .manifest import MANIFEST_FILE_NAME, StageRecord, build_manifest, output_digests

logger = logging.getLogger(__name__)

STAGES = ("postprocess", "align", "lifecycle", "landuse", "analytics")
STAGING_DIR_NAME = ".staging"
QUARANTINE_DIR_NAME = "quarantine"

type StageCallback = Callable[[str, float], None]


class PipelineRun:
    """State carried between the stages of one run."""

    def __init__(self, config: RunConfig, staging: pathlib.Path):
        self.config = config
        self.parameters = config.parameters
        self.crs = config.projected_crs
        self.timeline = config.observation_timeline
        self.staging = staging
        self.records: list[StageRecord] = []
        self.snapshots: list[UVSnapshot] = []
        self.aligned: list[UVSnapshot] = []
        self.parcels: list[LifecycleParcel] = []
        self.partition: LifecyclePartition | None = None

    @classmethod
    def from_outputs(
        cls, config: RunConfig, output_dir: pathlib.Path, staging: pathlib.Path
    ) -> "PipelineRun":
        """Reload aligned extents and resolved parcels written by an earlier run."""
        run = cls(config, staging)
        for year in run.timeline:
            path = output_dir / "align" / f"uv_{year}.geojson"
            if not path.exists():
                message = f"{path} is missing; run `uvl run` first."
                raise UvlUserError(message)
            extent = read_polygon_set(path, run.crs)
            run.aligned.append(UVSnapshot(year, extent, "aligned"))
        parcels_path = output_dir / "landuse" / "parcels.geojson"
        if not parcels_path.exists():
            message = f"{parcels_path} is missing; run `uvl run` first."
            raise UvlUserError(message)
        run.parcels = read_parcels(parcels_path, run.crs)
        extents = {snapshot.year: snapshot.extent for snapshot in run.aligned}
        run.partition = partition(extents, run.timeline)
        return run

    def _output(self, record: StageRecord, relative: str) -> pathlib.Path:
        record.outputs.append(relative)
        return self.staging / relative

    def postprocess(self, record: StageRecord) -> None:
        for year in self.timeline:
            inputs = self.config.years[year]
            if inputs.snapshot is not None:
                extent = read_polygon_set(inputs.snapshot, self.crs)
                provenance = f"snapshot {inputs.snapshot.name}"
            else:
                assert inputs.mask is not None
                mask, mask_crs = read_mask(inputs.mask, self.parameters.binarize)
                require_same_crs(self.crs, mask_crs)
                extent = clean_mask(
                    mask,
                    self.crs,
                    element_shape=self.parameters.structuring_element,
                    close_radius=self.parameters.close_radius,
                    open_radius=self.parameters.open_radius,
                    min_area=self.parameters.min_area,
                    jobs=self.parameters.jobs,
                )
                provenance = f"mask {inputs.mask.name}"
            self.snapshots.append(UVSnapshot(year, extent, provenance))
            write_polygon_set(
                self._output(record, f"postprocess/uv_{year}.geojson"),
                extent,
                {"year": year},
            )

    def align(self, record: StageRecord) -> None:
        aligned = align_temporal(self.snapshots, self.parameters.iou_threshold)
        if self.config.alignment_overrides is not None:
            edits = manual_edits_from_features(
                read_features(self.config.alignment_overrides, self.crs)
            )
            aligned = apply_manual_edits(aligned, edits)
        self.aligned = aligned
        for snapshot in aligned:
            write_polygon_set(
                self._output(record, f"align/uv_{snapshot.year}.geojson"),
                snapshot.extent,
                {"year": snapshot.year, "provenance": snapshot.provenance},
            )

    def lifecycle(self, record: StageRecord) -> None:
        extents = {snapshot.year: snapshot.extent for snapshot in self.aligned}
        parcels = build_parcels(
            extents, self.timeline, self.parameters.delta, self.parameters.jobs
        )
        flagged = find_inconsistent(parcels)
        if flagged:
            notes = "; ".join(f"{parcel_id}: {error}" for parcel_id, error in flagged)
            message = f"Inconsistent boundary sequences need manual review: {notes}"
            raise UvlStageError("lifecycle", message, [i for i, _ in flagged])
        self.parcels = parcels
        self.partition = partition(extents, self.timeline)

        write_parcels(
            self._output(record, "lifecycle/parcels_boundary.geojson"),
            parcels,
            self.crs,
        )
        for name in ("remained", "demolished", "emerged"):
            write_polygon_set(
                self._output(record, f"lifecycle/{name}.geojson"),
                getattr(self.partition, name),
                {"extent": name},
            )
        atomic_write_json(
            self._output(record, "lifecycle/partition.json"),
            self.partition.areas(),
        )

    def _tag_mapping(self) -> TagMapping:
        if self.config.tag_mapping is not None:
            mapping = read_tag_mapping(self.config.tag_mapping)
        else:
            mapping = default_tag_mapping()
        return mapping.with_road_width(self.parameters.road_width)

    def _year_evidence(
        self, year: int, mapping: TagMapping, parcel_ids: list[str]
    ) -> YearEvidence:
        inputs = self.config.years[year]
        pois = read_pois(inputs.pois) if inputs.pois is not None else []
        osm = (
            read_osm(inputs.osm, self.crs, mapping) if inputs.osm is not None else []
        )
        index = None
        if pois or osm:
            index = EvidenceIndex(
                pois, osm, self.crs, mapping, self.parameters.osm_coverage_gate
            )
        category_raster = None
        if inputs.category_raster is not None:
            category_raster, raster_crs = read_category_raster(inputs.category_raster)
            require_same_crs(self.crs, raster_crs)
        imagery = None
        if inputs.imagery is not None:
            raster = read_raster(inputs.imagery)
            require_same_crs(self.crs, raster.crs)
            imagery = LuminanceRaster(raster.grid, to_unit_interval(raster.array))
        labels = {}
        if inputs.transitional_labels is not None:
            labels = import_transitional_labels(inputs.transitional_labels, parcel_ids)
        return YearEvidence(index, category_raster, imagery, labels)

    def landuse(self, record: StageRecord) -> None:
        mapping = self._tag_mapping()
        parcel_ids = [parcel.id for parcel in self.parcels]
        pending_years = sorted(
            {year for parcel in self.parcels for year in parcel.pending_years}
        )
        evidence = {
            year: self._year_evidence(year, mapping, parcel_ids)
            for year in self.timeline
            if year != self.timeline.first
        }
        logger.info("Land-use assignment for years %s", pending_years)
        manual = (
            read_manual_labels(self.config.manual_labels)
            if self.config.manual_labels is not None
            else {}
        )
        settings = ResolverSettings(
            mixed_use_split=self.parameters.mixed_use_split,
            mixed_use_threshold=self.parameters.mixed_use_threshold,
        )
        parcels = resolve_parcels(
            self.parcels, evidence, manual, settings, self.parameters.jobs
        )

        flagged = find_inconsistent(parcels)
        if flagged:
            notes = "; ".join(
                f"{parcel_id}: {error} (rule `{error.rule}`)"
                for parcel_id, error in flagged
            )
            message = f"Category sequences need manual review: {notes}"
            raise UvlStageError("landuse", message, [i for i, _ in flagged])
        self.parcels = parcels

        years = list(self.timeline)
        write_parcels(
            self._output(record, "landuse/parcels.geojson"), parcels, self.crs
        )
        write_parcels_csv(self._output(record, "landuse/parcels.csv"), parcels, years)

    def analytics(self, record: StageRecord) -> None:
        matrices: list[TransitionMatrix] = []
        for from_year, to_year in self.timeline.periods:
            matrix = build_matrix(self.parcels, from_year, to_year)
            matrices.append(matrix)
            name = f"analytics/transitions_{from_year}_{to_year}.csv"
            write_matrix_csv(self._output(record, name), matrix)
        write_sankey(
            self._output(record, "analytics/sankey.json"), sankey_export(matrices)
        )

        periods = [PeriodSummary(m, category_shares(m)) for m in matrices]
        share_rows = [
            {
                "from_year": period.shares.period[0],
                "to_year": period.shares.period[1],
                "category": row.category.value,
                "area_m2": row.area_m2,
                "share_of_baseline_pct": row.share_of_baseline,
                "share_of_demolished_pct": row.share_of_demolished,
            }
            for period in periods
            for row in period.shares.rows
        ]
        atomic_write_csv(
            self._output(record, "analytics/category_shares.csv"),
            pd.DataFrame(share_rows),
        )

        timeline_rows = area_timeline(self.aligned)
        atomic_write_csv(
            self._output(record, "analytics/area_timeline.csv"),
            pd.DataFrame([dataclasses.asdict(row) for row in timeline_rows]),
        )

        zones = []
        if self.config.zones is not None:
            zone_list = read_zones(self.config.zones, self.crs)
            zones = zonal_aggregate(self.parcels, zone_list, self.timeline.last)
            write_zonal_csv(self._output(record, "analytics/zonal.csv"), zones)

        baseline = self.aligned[0].extent.area
        remaining = (
            remaining_share(self.aligned[-1].extent.area, baseline)
            if baseline > 0
            else None
        )
        phases = phase_areas(self.parcels)
        pathways = pathway_areas(self.parcels)
        assert self.partition is not None
        summary = {
            "partition_m2": self.partition.areas(),
            "phase_areas_m2": {phase.value: area for phase, area in phases.items()},
            "pathway_areas_m2": {key.value: area for key, area in pathways.items()},
            "pathway_shares_pct": {
                key.value: share for key, share in pathway_shares(pathways).items()
            },
            "remaining_share_pct": remaining,
            "vacancy_rate_pct": {
                f"{p.matrix.to_year}": p.shares.vacancy_rate for p in periods
            },
        }
        atomic_write_json(self._output(record, "analytics/summary.json"), summary)

        data = ReportData(
            city=self.config.city,
            years=list(self.timeline),
            area_timeline=timeline_rows,
            partition=self.partition.areas(),
            remaining_share=remaining,
            phase_areas=phases,
            pathway_areas=pathways,
            pathway_shares=pathway_shares(pathways),
            periods=periods,
            zones=zones,
            parameters=self.parameters.model_dump(mode="json"),
        )
        write_report(
            data,
            self._output(record, "analytics/report.md"),
            self._output(record, "analytics/report.html"),
        )


def _stage_error(stage: str, error: UvlUserError) -> UvlStageError:
    ids = error.parcel_ids if isinstance(error, UnresolvedParcelsError) else []
    return UvlStageError(stage, str(error), list(ids))


def _replace(source: pathlib.Path, target: pathlib.Path) -> None:
    if target.is_dir():
        shutil.rmtree(target)
    elif target.exists():
        target.unlink()
    source.replace(target)


def run_pipeline(
    config: RunConfig,
    config_file_path: pathlib.Path | None = None,
    on_stage: StageCallback | None = None,
) -> dict:
    """Run every stage and return the manifest written to the output directory.

    Args:
        config: Validated run configuration.
        config_file_path: The configuration file; it is copied into the output
            directory and input paths in the manifest are shown relative to it.
        on_stage: Called with each finished stage's name and duration in seconds.

    Returns:
        The manifest.

    Raises:
        UvlStageError: A stage failed; its partial outputs are in `quarantine/`.
    """
    output_dir = config.output_dir
    base_dir = config_file_path.parent if config_file_path else None
    staging = output_dir / STAGING_DIR_NAME
    if staging.exists():
        shutil.rmtree(staging)
    staging.mkdir(parents=True)

    if config_file_path is not None:
        atomic_write_bytes(staging / "config.yaml", config_file_path.read_bytes())
    else:
        atomic_write_bytes(
            staging / "config.yaml",
            dictionary_to_yaml(config.model_dump(mode="json")).encode("utf-8"),
        )

    run = PipelineRun(config, staging)
    for stage in STAGES:
        record = StageRecord(stage)
        run.records.append(record)
        started = time.perf_counter()
        logger.info("Stage %s started", stage)
        try:
            try:
                getattr(run, stage)(record)
            except UvlStageError:
                raise
            except UvlUserError as e:
                raise _stage_error(stage, e) from e
        except UvlStageError as e:
            record.status = "failed"
            record.message = e.message
            record.entity_ids = e.entity_ids
            _quarantine(config, base_dir, run.records, staging, output_dir)
            raise
        if on_stage is not None:
            on_stage(stage, time.perf_counter() - started)

    outputs = output_digests(staging)
    for entry in sorted(staging.iterdir()):
        _replace(entry, output_dir / entry.name)
    shutil.rmtree(staging)
    quarantine = output_dir / QUARANTINE_DIR_NAME
    if quarantine.exists():
        shutil.rmtree(quarantine)

    manifest = build_manifest(config, base_dir, run.records, outputs, "ok")
    atomic_write_json(output_dir / MANIFEST_FILE_NAME, manifest)
    logger.info("Run finished; outputs in %s", output_dir)
    return manifest


def _quarantine(
    config: RunConfig,
    base_dir: pathlib.Path | None,
    records: list[StageRecord],
    staging: pathlib.Path,
    output_dir: pathlib.Path,
) -> None:
    quarantine = output_dir / QUARANTINE_DIR_NAME
    outputs = output_digests(staging)
    _replace(staging, quarantine)
    manifest = build_manifest(config, base_dir, records, outputs, "failed")
    atomic_write_json(quarantine / MANIFEST_FILE_NAME, manifest)
    logger.warning("Partial outputs moved to %s", quarantine)
