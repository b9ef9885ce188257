from .plan import TilePlan, TileWindow, plan_tiles
from .stitch import BlendMode, StitchAccumulator, stitch

__all__ = [
    "BlendMode",
    "StitchAccumulator",
    "TilePlan",
    "TileWindow",
    "plan_tiles",
    "stitch",
]
