import logging
import pathlib

from typer.testing import CliRunner

from uvlife import __version__
from uvlife.cli.app import app, configure_logging


def test_all_commands_are_registered():
    cli_folder = pathlib.Path(__file__).parent.parent.parent / "src" / "uvlife" / "cli"
    command_files = list(cli_folder.rglob("*_command.py"))

    registered_commands = app.registered_commands

    assert len(registered_commands) == len(command_files)


class TestCliCommandNoArgs:
    def test_prints_version_when_requested(self):
        runner = CliRunner()
        result = runner.invoke(app, ["--version"])

        assert result.exit_code == 0
        assert f"uvlife v{__version__}" in result.output

    def test_prints_version_with_short_flag(self):
        runner = CliRunner()
        result = runner.invoke(app, ["-v"])

        assert result.exit_code == 0
        assert f"uvlife v{__version__}" in result.output

    def test_shows_help_when_no_args(self):
        runner = CliRunner()
        result = runner.invoke(app, [])

        assert result.exit_code == 0
        assert "lifecycle" in result.output


class TestConfigureLogging:
    def teardown_method(self):
        configure_logging(verbose=False, quiet=False)

    def test_info_by_default(self):
        configure_logging(verbose=False, quiet=False)

        assert logging.getLogger("uvlife").level == logging.INFO

    def test_verbose_shows_debug(self):
        configure_logging(verbose=True, quiet=False)

        assert logging.getLogger("uvlife").level == logging.DEBUG

    def test_quiet_wins_over_verbose(self):
        configure_logging(verbose=True, quiet=True)

        assert logging.getLogger("uvlife").level == logging.WARNING

    def test_single_handler_that_does_not_propagate(self):
        configure_logging(verbose=False, quiet=False)
        configure_logging(verbose=False, quiet=False)

        logger = logging.getLogger("uvlife")
        assert len(logger.handlers) == 1
        assert logger.propagate is False
