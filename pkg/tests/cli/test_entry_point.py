import importlib
import sys
from unittest.mock import patch

import pytest

from uvlife.cli import entry_point as entry_point_module
from uvlife.cli.entry_point import entry_point


class TestEntryPoint:
    """Test the CLI entry point that handles a broken installation."""

    def test_entry_point_runs_when_installed_correctly(self):
        with patch("uvlife.cli.app.app") as mock_cli_app:
            entry_point()
            mock_cli_app.assert_called_once()

    def test_entry_point_shows_error_when_import_fails(self, capsys):
        app_module = sys.modules.get("uvlife.cli.app")

        try:
            if "uvlife.cli.app" in sys.modules:
                del sys.modules["uvlife.cli.app"]

            with patch.dict("sys.modules", {"uvlife.cli.app": None}):
                importlib.reload(entry_point_module)
                with pytest.raises(SystemExit) as exc_info:
                    entry_point_module.entry_point()

            assert exc_info.value.code == 1

            captured = capsys.readouterr()
            assert "could not import" in captured.err
            assert "pip install --force-reinstall uvlife" in captured.err

        finally:
            if app_module is not None:
                sys.modules["uvlife.cli.app"] = app_module
            importlib.reload(entry_point_module)
