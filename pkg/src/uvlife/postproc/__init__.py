from .alignment import EditAction, ManualEdit, align_temporal, apply_manual_edits
from .cleaning import clean_mask, drop_small
from .morphology import (
    ElementShape,
    StructuringElement,
    dilate,
    erode,
    morph_close,
    morph_open,
)
from .snapshot import UVSnapshot

__all__ = [
    "EditAction",
    "ElementShape",
    "ManualEdit",
    "StructuringElement",
    "UVSnapshot",
    "align_temporal",
    "apply_manual_edits",
    "clean_mask",
    "dilate",
    "drop_small",
    "erode",
    "morph_close",
    "morph_open",
]
