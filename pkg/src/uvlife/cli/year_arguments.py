import pathlib

from uvlife.exception import UvlUserError


def parse_year_paths(arguments: list[str]) -> dict[int, pathlib.Path]:
    """Parse `YEAR=PATH` arguments, e.g. `2015=uv_2015.geojson`.

    Raises:
        UvlUserError: An argument is malformed, a year repeats or a file is
            missing.
    """
    year_paths: dict[int, pathlib.Path] = {}
    for argument in arguments:
        year_text, separator, path_text = argument.partition("=")
        if not separator or not path_text:
            message = f"`{argument}` should look like `2015=uv_2015.geojson`."
            raise UvlUserError(message)
        try:
            year = int(year_text)
        except ValueError as e:
            message = f"`{year_text}` in `{argument}` is not a year."
            raise UvlUserError(message) from e
        if year in year_paths:
            message = f"The year {year} is given twice."
            raise UvlUserError(message)
        path = pathlib.Path(path_text)
        if not path.exists():
            message = f"The file {path} does not exist."
            raise UvlUserError(message)
        year_paths[year] = path
    return dict(sorted(year_paths.items()))
