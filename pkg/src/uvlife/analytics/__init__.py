from .matrix import (
    TransitionMatrix,
    build_matrix,
    read_matrix_csv,
    write_matrix_csv,
)
from .report import PeriodSummary, ReportData, render_markdown_report, write_report
from .sankey import SankeyFlows, node_totals, sankey_export, write_sankey
from .shares import (
    CategoryShares,
    YearArea,
    area_timeline,
    category_shares,
    pathway_areas,
    pathway_shares,
    percentage,
    phase_areas,
    remaining_share,
)
from .zonal import (
    OUTSIDE_ZONE_ID,
    Zone,
    ZoneStats,
    check_zones,
    read_zones,
    write_zonal_csv,
    zonal_aggregate,
)

__all__ = [
    "OUTSIDE_ZONE_ID",
    "CategoryShares",
    "PeriodSummary",
    "ReportData",
    "SankeyFlows",
    "TransitionMatrix",
    "YearArea",
    "Zone",
    "ZoneStats",
    "area_timeline",
    "build_matrix",
    "category_shares",
    "check_zones",
    "node_totals",
    "pathway_areas",
    "pathway_shares",
    "percentage",
    "phase_areas",
    "read_matrix_csv",
    "read_zones",
    "remaining_share",
    "render_markdown_report",
    "sankey_export",
    "write_matrix_csv",
    "write_report",
    "write_sankey",
    "write_zonal_csv",
    "zonal_aggregate",
]
