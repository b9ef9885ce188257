import json

from typer.testing import CliRunner

from uvlife.cli.app import app
from uvlife.schema.yaml_reader import read_yaml
from uvlife.schema.yaml_writer import write_yaml

runner = CliRunner()


def read_manifest(city):
    return json.loads((city.directory / "output" / "manifest.json").read_text())


class TestCliCommandRun:
    def test_writes_every_output(self, city):
        result = runner.invoke(app, ["run", str(city.config_path), "--no-progress"])

        assert result.exit_code == 0, result.output
        manifest = read_manifest(city)
        assert manifest["status"] == "ok"
        assert "analytics/report.md" in manifest["outputs"]

    def test_overrides_reach_the_parameters(self, city):
        result = runner.invoke(
            app,
            [
                "run",
                str(city.config_path),
                "--no-progress",
                "--jobs",
                "2",
                "--parameters.delta",
                "0.4",
            ],
        )

        assert result.exit_code == 0, result.output
        parameters = read_manifest(city)["parameters"]
        assert parameters["delta"] == 0.4
        assert parameters["jobs"] == 2

    def test_invalid_override_exits_with_user_error(self, city):
        result = runner.invoke(
            app,
            ["run", str(city.config_path), "--no-progress", "--parameters.delta", "2"],
        )

        assert result.exit_code == 2
        assert not (city.directory / "output" / "manifest.json").exists()

    def test_missing_config_exits_with_user_error(self, tmp_path):
        result = runner.invoke(app, ["run", str(tmp_path / "missing.yaml")])

        assert result.exit_code == 2

    def test_failed_stage_exits_with_stage_error(self, city):
        data = read_yaml(city.config_path)
        for inputs in data["years"].values():
            del inputs["imagery"]
        write_yaml(city.config_path, dict(data))

        result = runner.invoke(app, ["run", str(city.config_path), "--no-progress"])

        assert result.exit_code == 3
        quarantine = city.directory / "output" / "quarantine"
        assert json.loads((quarantine / "manifest.json").read_text())["status"] == (
            "failed"
        )
