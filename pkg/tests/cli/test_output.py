from uvlife.cli.output import print_outputs


class TestPrintOutputs:
    def test_paths_below_the_working_directory_are_relative(
        self, tmp_path, capsys, monkeypatch
    ):
        monkeypatch.chdir(tmp_path)

        print_outputs("Aligned extents", [tmp_path / "aligned" / "uv_2015.geojson"])

        captured = capsys.readouterr()
        assert "Aligned extents" in captured.out
        assert "./aligned/uv_2015.geojson" in captured.out

    def test_several_paths_are_joined(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)

        print_outputs("Written", [tmp_path / "a.csv", tmp_path / "b.csv"])

        assert "./a.csv; ./b.csv" in capsys.readouterr().out
