"""Markdown and HTML run reports rendered from Jinja2 templates."""

import functools
import pathlib
from dataclasses import dataclass, field
from typing import Any

import jinja2
import markdown

from uvlife.files import atomic_write_text
from uvlife.lifecycle.categories import LandUseCategory, Pathway, PhaseLabel

from .matrix import TransitionMatrix
from .shares import CategoryShares, YearArea, round_half_up
from .zonal import ZoneStats

templates_directory = pathlib.Path(__file__).parent / "templates"


@dataclass(frozen=True)
class PeriodSummary:
    matrix: TransitionMatrix
    shares: CategoryShares


@dataclass(frozen=True)
class ReportData:
    city: str
    years: list[int]
    area_timeline: list[YearArea]
    partition: dict[str, float]
    remaining_share: float | None
    phase_areas: dict[PhaseLabel, float]
    pathway_areas: dict[Pathway, float]
    pathway_shares: dict[Pathway, float | None]
    periods: list[PeriodSummary]
    zones: list[ZoneStats] = field(default_factory=list)
    parameters: dict[str, Any] = field(default_factory=dict)


def _km2(value: float | None) -> str:
    if value is None:
        return "n/a"
    return f"{round_half_up(value / 1e6):.2f}"


def _pct(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.2f}%"


@functools.lru_cache(maxsize=1)
def get_jinja2_environment() -> jinja2.Environment:
    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(templates_directory),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=jinja2.StrictUndefined,
    )
    env.filters["km2"] = _km2
    env.filters["pct"] = _pct
    env.filters["fixed2"] = lambda value: f"{value:.2f}"
    return env


def render_markdown_report(data: ReportData) -> str:
    template = get_jinja2_environment().get_template("markdown/Report.j2.md")
    return template.render(
        **vars(data),
        categories=list(LandUseCategory),
        pathways=list(Pathway),
    )


def markdown_to_html(markdown_string: str) -> str:
    return markdown.markdown(markdown_string, extensions=["tables"])


def render_html_report(title: str, markdown_report: str) -> str:
    """Wrap the converted Markdown body in a standalone HTML page."""
    template = get_jinja2_environment().get_template("html/Full.html")
    return template.render(title=title, html_body=markdown_to_html(markdown_report))


def write_report(
    data: ReportData, markdown_path: pathlib.Path, html_path: pathlib.Path | None
) -> list[pathlib.Path]:
    contents = render_markdown_report(data)
    written = [atomic_write_text(markdown_path, contents)]
    if html_path is not None:
        title = f"Urban-village lifecycle report: {data.city}"
        html = render_html_report(title, contents)
        written.append(atomic_write_text(html_path, html))
    return written
