from .assignment import EvidenceIndex, assign_redeveloped
from .dominant import dominant_category
from .evidence import OsmFeature, PoiPoint, read_osm, read_pois
from .mixed import split_mixed_use
from .resolve import (
    LuminanceRaster,
    ResolverSettings,
    YearEvidence,
    read_manual_labels,
    resolve_parcels,
)
from .transitional import (
    ImageChip,
    TransitionalVerdict,
    heuristic_transitional,
    import_transitional_labels,
)
from .vocabulary import TagMapping, default_tag_mapping, read_tag_mapping

__all__ = [
    "EvidenceIndex",
    "ImageChip",
    "LuminanceRaster",
    "OsmFeature",
    "PoiPoint",
    "ResolverSettings",
    "TagMapping",
    "TransitionalVerdict",
    "YearEvidence",
    "assign_redeveloped",
    "default_tag_mapping",
    "dominant_category",
    "heuristic_transitional",
    "import_transitional_labels",
    "read_osm",
    "read_pois",
    "read_manual_labels",
    "read_tag_mapping",
    "resolve_parcels",
    "split_mixed_use",
]
