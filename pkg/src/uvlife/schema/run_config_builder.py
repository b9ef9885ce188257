import pathlib

from ruamel.yaml.comments import CommentedMap

from .models.run_config import RunConfig
from .models.scenario import ScenarioScript
from .models.validation_context import ValidationContext
from .override_dictionary import apply_overrides_to_dictionary
from .pydantic_error_handling import validate_with_friendly_errors
from .yaml_reader import read_yaml


def build_run_config_dictionary(
    config_file_path: pathlib.Path, overrides: dict[str, str] | None = None
) -> CommentedMap:
    """Read the run configuration and apply dotted CLI overrides.

    Example:
        ```py
        data = build_run_config_dictionary(
            pathlib.Path("config.yaml"), overrides={"parameters.delta": "0.4"}
        )
        ```
    """
    input_dict = read_yaml(config_file_path)
    if overrides:
        input_dict = apply_overrides_to_dictionary(input_dict, overrides)
    return input_dict


def build_run_config(
    config_file_path: pathlib.Path, overrides: dict[str, str] | None = None
) -> tuple[CommentedMap, RunConfig]:
    """Complete path from a configuration file to a validated `RunConfig`.

    Why:
        Every referenced path is resolved against the configuration file and
        checked for existence here, so a missing input stops the run before any
        stage starts. The dictionary is returned too because error reporting
        needs its line numbers.
    """
    data = build_run_config_dictionary(config_file_path, overrides)
    context = {"context": ValidationContext(input_file_path=config_file_path)}
    return data, validate_with_friendly_errors(RunConfig, data, context)


def build_scenario_script(
    script_file_path: pathlib.Path, overrides: dict[str, str] | None = None
) -> ScenarioScript:
    data = read_yaml(script_file_path)
    if overrides:
        data = apply_overrides_to_dictionary(data, overrides)
    context = {"context": ValidationContext(input_file_path=script_file_path)}
    return validate_with_friendly_errors(ScenarioScript, data, context)
