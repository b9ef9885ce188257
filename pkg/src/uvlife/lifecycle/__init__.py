from .categories import (
    LEGEND,
    AssignmentMethod,
    LandUseCategory,
    Pathway,
    PhaseLabel,
)
from .extents import (
    LifecyclePartition,
    demolished_extent,
    detect_incomplete,
    partition,
    remained_extent,
    study_universe,
)
from .io import read_parcels, write_parcels, write_parcels_csv
from .parcels import LifecycleParcel, build_parcels, find_inconsistent
from .phases import assign_phase, check_sequence, classify_pathway
from .timeline import Timeline

__all__ = [
    "LEGEND",
    "AssignmentMethod",
    "LandUseCategory",
    "LifecycleParcel",
    "LifecyclePartition",
    "Pathway",
    "PhaseLabel",
    "Timeline",
    "assign_phase",
    "build_parcels",
    "check_sequence",
    "classify_pathway",
    "demolished_extent",
    "detect_incomplete",
    "find_inconsistent",
    "partition",
    "read_parcels",
    "remained_extent",
    "study_universe",
    "write_parcels",
    "write_parcels_csv",
]
