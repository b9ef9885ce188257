import pathlib
from dataclasses import dataclass

import rich.console
import rich.live
import rich.panel


@dataclass
class CompletedStage:
    name: str
    timing_ms: str


class ProgressPanel(rich.live.Live):
    """Live-updating panel listing finished stages with their timing.

    Timings are shown on standard error only and never enter the run outputs.

    Example:
        ```py
        with ProgressPanel(quiet=False) as progress:
            progress.update_progress("lifecycle", 0.42)
            progress.finish_progress(pathlib.Path("uvl_output"))
        # Displays: ✓ 420 ms   lifecycle
        ```

    Args:
        quiet: Suppress all terminal output.
    """

    def __init__(self, quiet: bool = False):
        self.quiet = quiet
        self.completed_stages: list[CompletedStage] = []
        super().__init__(
            self._panel("...", "Running the pipeline..."),
            console=rich.console.Console(stderr=True, quiet=quiet),
            refresh_per_second=4,
        )

    @staticmethod
    def _panel(content: str, title: str) -> rich.panel.Panel:
        return rich.panel.Panel(
            content, title=title, title_align="left", border_style="bright_black"
        )

    def update_progress(self, stage: str, seconds: float) -> None:
        self.completed_stages.append(CompletedStage(stage, f"{seconds * 1000:.0f}"))
        self.print_progress_panel("Running the pipeline...")

    def finish_progress(self, output_dir: pathlib.Path) -> None:
        self.print_progress_panel(f"Outputs are ready in {output_dir}")

    def print_progress_panel(self, title: str) -> None:
        if self.quiet:
            return
        lines = [
            f"[green]✓[/green] [bold green]{stage.timing_ms + ' ms':<9}[/bold green]"
            f" {stage.name}"
            for stage in self.completed_stages
        ]
        self.update(self._panel("\n".join(lines) or "Starting...", title))
