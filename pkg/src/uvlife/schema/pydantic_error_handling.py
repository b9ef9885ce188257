import pathlib
from typing import Any, cast

import pydantic
import pydantic_core
from ruamel.yaml.comments import CommentedMap

from uvlife.exception import (
    UvlInternalError,
    UvlUserValidationError,
    UvlValidationError,
)

from .yaml_reader import read_yaml

error_dictionary = cast(
    dict[str, str],
    read_yaml(pathlib.Path(__file__).parent / "error_dictionary.yaml"),
)
unwanted_texts = ("Value error, ", "Assertion failed, ")
unwanted_locations = (
    "tagged-union",
    "list",
    "literal",
    "int",
    "str",
    "constrained-str",
    "function-after",
)


def parse_plain_pydantic_error(
    plain_error: pydantic_core.ErrorDetails,
    input_dictionary: CommentedMap | dict[str, Any],
) -> UvlValidationError:
    """Transform a raw Pydantic error into a validation error with YAML coordinates.

    Why:
        Pydantic messages name internal validators and carry no line numbers.
        Users fix configuration files, so each error is rewritten through
        `error_dictionary.yaml` and pinned to the line it came from.

    Args:
        plain_error: Raw Pydantic validation error.
        input_dictionary: YAML dict with line/column metadata.

    Returns:
        Structured error with location tuple, friendly message, and YAML coordinates.
    """
    for unwanted_text in unwanted_texts:
        plain_error["msg"] = plain_error["msg"].replace(unwanted_text, "")

    if "ctx" in plain_error and "input" in plain_error["ctx"]:
        plain_error["input"] = plain_error["ctx"]["input"]

    location = tuple(
        str(location_element)
        for location_element in plain_error["loc"]
        if not any(item in str(location_element) for item in unwanted_locations)
    )

    for old_error_message, new_error_message in error_dictionary.items():
        if old_error_message in plain_error["msg"]:
            plain_error["msg"] = new_error_message
            break

    if not plain_error["msg"].endswith("."):
        plain_error["msg"] += "."

    yaml_location = None
    if isinstance(input_dictionary, CommentedMap) and location:
        try:
            yaml_location = get_coordinates_of_a_key_in_a_yaml_object(
                input_dictionary,
                location if plain_error["type"] != "missing" else location[:-1],
            )
        except UvlInternalError:
            yaml_location = None

    return UvlValidationError(
        location=location,
        message=plain_error["msg"],
        input=(
            str(plain_error["input"])
            if not isinstance(plain_error["input"], dict | list)
            else "..."
        ),
        yaml_location=yaml_location,
    )


def parse_validation_errors(
    exception: pydantic.ValidationError,
    input_dictionary: CommentedMap | dict[str, Any],
) -> list[UvlValidationError]:
    """Flatten a Pydantic exception into user-facing errors, one per location."""
    errors_without_duplicates: list[UvlValidationError] = []
    error_locations = set()
    for plain_error in exception.errors():
        error = parse_plain_pydantic_error(plain_error, input_dictionary)
        if error.location not in error_locations:
            error_locations.add(error.location)
            errors_without_duplicates.append(error)
    return errors_without_duplicates


def validate_with_friendly_errors[M: pydantic.BaseModel](
    model: type[M],
    data: CommentedMap | dict[str, Any],
    context: dict[str, Any] | None = None,
) -> M:
    """Validate `data` as `model`, raising `UvlUserValidationError` on failure."""
    try:
        return model.model_validate(data, context=context)
    except pydantic.ValidationError as e:
        raise UvlUserValidationError(parse_validation_errors(e, data)) from e


def get_inner_yaml_object_from_its_key(
    yaml_object: CommentedMap,
    location_key: str,
) -> tuple[CommentedMap, tuple[tuple[int, int], tuple[int, int]]]:
    """Step one level into a YAML structure and return its source coordinates.

    Args:
        yaml_object: Current YAML object being traversed.
        location_key: Single key or list index as string.

    Returns:
        Tuple of nested object and ((start_line, start_col), (end_line, end_col)).
    """
    try:
        index = int(location_key)
    except ValueError:
        index = None

    if index is not None and isinstance(yaml_object, list):
        try:
            inner_yaml_object = yaml_object[index]
            start_line, start_col = yaml_object.lc.data[index]
        except (IndexError, AttributeError) as e:
            message = f"Index {index} is out of range in the YAML file."
            raise UvlInternalError(message) from e
        coordinates = ((start_line + 1, start_col - 1), (start_line + 1, start_col))
        return inner_yaml_object, coordinates

    key: str | int = location_key
    if key not in yaml_object and index is not None and index in yaml_object:
        # Mapping keyed by integers, like `years: {2015: ...}`.
        key = index
    if key not in yaml_object:
        message = f"Key '{location_key}' not found in the YAML file."
        raise UvlInternalError(message)

    inner_yaml_object = yaml_object[key]
    try:
        start_line, start_col, end_line, end_col = yaml_object.lc.data[key]
    except (KeyError, AttributeError) as e:
        message = f"Key '{location_key}' has no source coordinates."
        raise UvlInternalError(message) from e
    coordinates = ((start_line + 1, start_col + 1), (end_line + 1, end_col))
    return inner_yaml_object, coordinates


def get_coordinates_of_a_key_in_a_yaml_object(
    yaml_object: CommentedMap, location: tuple[str, ...]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Resolve a location path to 1-indexed YAML source coordinates.

    Example:
        ```py
        data = read_yaml(pathlib.Path("config.yaml"))
        get_coordinates_of_a_key_in_a_yaml_object(data, ("parameters", "delta"))
        # ((14, 3), (14, 8))
        ```
    """
    current_yaml_object = yaml_object
    coordinates = ((0, 0), (0, 0))
    for location_key in location:
        current_yaml_object, coordinates = get_inner_yaml_object_from_its_key(
            current_yaml_object, location_key
        )
    return coordinates
