import pytest

from uvlife.analytics.matrix import build_matrix
from uvlife.analytics.report import (
    PeriodSummary,
    ReportData,
    render_html_report,
    render_markdown_report,
    write_report,
)
from uvlife.analytics.shares import (
    category_shares,
    pathway_areas,
    pathway_shares,
    phase_areas,
)
from uvlife.analytics.zonal import Zone, zonal_aggregate


@pytest.fixture
def report_data(parcels):
    periods = [
        PeriodSummary(matrix, category_shares(matrix))
        for matrix in (
            build_matrix(parcels, 2015, 2019),
            build_matrix(parcels, 2019, 2023),
        )
    ]
    areas = pathway_areas(parcels)
    return ReportData(
        city="Testville",
        years=[2015, 2019, 2023],
        area_timeline=[],
        partition={"remained": 10000.0, "demolished": 25000.0, "emerged": 0.0},
        remaining_share=28.57,
        phase_areas=phase_areas(parcels),
        pathway_areas=areas,
        pathway_shares=pathway_shares(areas),
        periods=periods,
        parameters={"delta": 0.3},
    )


class TestRenderMarkdownReport:
    def test_sections(self, report_data):
        report = render_markdown_report(report_data)

        assert report.startswith("# Urban-village lifecycle report: Testville\n")
        assert "Observation years: 2015, 2019, 2023" in report
        assert "## Transitions 2015 to 2019" in report
        assert "## Transitions 2019 to 2023" in report
        assert "Remaining share of the baseline area: 28.57%" in report
        assert "| gradual | 0.01 | 40.00% |" in report
        assert "| delta | 0.3 |" in report
        assert "## Zones" not in report

    def test_vacancy_rate_per_period(self, report_data):
        report = render_markdown_report(report_data)

        assert report.count("Vacancy rate: 40.00%") == 2

    def test_missing_values_read_n_a(self, report_data):
        data = ReportData(**{**vars(report_data), "remaining_share": None})

        assert "baseline area: n/a" in render_markdown_report(data)

    def test_zones(self, report_data, parcels, boxes):
        zones = [Zone("west", "West district", boxes((0, 0, 150, 100)))]
        data = ReportData(
            **{**vars(report_data), "zones": zonal_aggregate(parcels, zones, 2023)}
        )

        report = render_markdown_report(data)

        assert "## Zones in 2023" in report
        assert "| West district |" in report
        assert "| Outside all zones |" in report


class TestHtmlReport:
    def test_tables_are_converted(self, report_data):
        html = render_html_report("Report", render_markdown_report(report_data))

        assert "<title>Report</title>" in html
        assert "<table>" in html
        assert "<h2>Transitions 2015 to 2019</h2>" in html

    def test_write_report(self, report_data, tmp_path):
        written = write_report(
            report_data, tmp_path / "report.md", tmp_path / "report.html"
        )

        assert [path.name for path in written] == ["report.md", "report.html"]
        assert "Testville" in (tmp_path / "report.html").read_text(encoding="utf-8")

    def test_markdown_only(self, report_data, tmp_path):
        written = write_report(report_data, tmp_path / "report.md", None)

        assert written == [tmp_path / "report.md"]
