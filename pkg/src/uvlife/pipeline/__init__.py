from .manifest import MANIFEST_FILE_NAME, StageRecord, build_manifest
from .run import STAGES, run_pipeline

__all__ = [
    "MANIFEST_FILE_NAME",
    "STAGES",
    "StageRecord",
    "build_manifest",
    "run_pipeline",
]
