import runpy
import sys
from unittest.mock import patch

import pytest


def test_main_module_runs():
    """Running the package as __main__ executes the CLI app."""
    # --help causes a SystemExit(0), which is expected
    with patch.object(sys, "argv", ["uvl", "--help"]):
        with pytest.raises(SystemExit) as exc_info:
            runpy.run_module("uvlife", run_name="__main__")
        assert exc_info.value.code == 0
