import pandas as pd
import pytest
from typer.testing import CliRunner

from uvlife.cli.app import app
from uvlife.schema.yaml_reader import read_yaml

runner = CliRunner()

SCRIPT = """\
seed: 5
random_parcels: 6
zone_count: 0
parcels:
  - sequence: [UrbanVillage, VacantLand, Buildings]
"""


@pytest.fixture
def script_file(tmp_path):
    path = tmp_path / "scenario.yaml"
    path.write_text(SCRIPT, encoding="utf-8")
    return path


class TestCliCommandSynth:
    def test_writes_a_runnable_bundle(self, tmp_path, script_file):
        result = runner.invoke(app, ["synth", str(script_file), str(tmp_path / "c")])

        assert result.exit_code == 0, result.output
        config = read_yaml(tmp_path / "c" / "config.yaml")
        assert config["parameters"]["seed"] == 5
        assert "zones" not in config
        truth = pd.read_csv(tmp_path / "c" / "truth" / "parcels.csv")
        assert len(truth) == 7
        assert truth.loc[0, "phase"] == "Redeveloped"

    def test_seed_option_overrides_the_script(self, tmp_path, script_file):
        result = runner.invoke(
            app,
            ["synth", str(script_file), str(tmp_path / "c"), "--seed", "9"],
        )

        assert result.exit_code == 0, result.output
        assert read_yaml(tmp_path / "c" / "config.yaml")["parameters"]["seed"] == 9

    def test_dotted_overrides(self, tmp_path, script_file):
        result = runner.invoke(
            app,
            ["synth", str(script_file), str(tmp_path / "c"), "--city", "Foshan"],
        )

        assert result.exit_code == 0, result.output
        assert read_yaml(tmp_path / "c" / "config.yaml")["city"] == "Foshan"

    def test_illegal_sequence_is_a_user_error(self, tmp_path):
        script = tmp_path / "scenario.yaml"
        script.write_text(
            "parcels:\n  - sequence: [UrbanVillage, VacantLand, UrbanVillage]\n",
            encoding="utf-8",
        )

        result = runner.invoke(app, ["synth", str(script), str(tmp_path / "c")])

        assert result.exit_code == 2
        assert not (tmp_path / "c").exists()
