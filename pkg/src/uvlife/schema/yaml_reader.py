import pathlib

import ruamel.yaml
import ruamel.yaml.nodes
import ruamel.yaml.scanner
from ruamel.yaml.comments import CommentedMap
from ruamel.yaml.scanner import RoundTripScanner

from uvlife.exception import UvlInternalError, UvlUserError

ACCEPTED_EXTENSIONS = (".yaml", ".yml", ".json")


def _build_yaml_parser(base_dir: pathlib.Path | None) -> ruamel.yaml.YAML:
    yaml_parser = ruamel.yaml.YAML()

    # Keep ISO dates as strings:
    yaml_parser.constructor.yaml_constructors["tag:yaml.org,2002:timestamp"] = (
        lambda loader, node: loader.construct_scalar(node)
    )

    def include_constructor(
        loader: ruamel.yaml.constructor.BaseConstructor,
        node: ruamel.yaml.nodes.Node,
    ) -> CommentedMap:
        if base_dir is None:
            message = "Cannot resolve !include without a base file path."
            raise UvlUserError(message)

        if not isinstance(node, ruamel.yaml.nodes.ScalarNode):
            message = "!include must be a scalar path."
            raise UvlUserError(message)

        include_path = pathlib.Path(loader.construct_scalar(node))
        if not include_path.is_absolute():
            include_path = base_dir / include_path
        return read_yaml(include_path)

    yaml_parser.constructor.add_constructor("!include", include_constructor)
    return yaml_parser


def read_yaml(file_path_or_contents: pathlib.Path | str) -> CommentedMap:
    """Parse YAML/JSON content from a file path or a string.

    Why:
        Validation errors must point at the offending line of the run
        configuration. `CommentedMap` keeps source coordinates so Pydantic error
        locations can be mapped back to YAML lines.

    Example:
        ```py
        data = read_yaml(pathlib.Path("config.yaml"))
        data["parameters"]["delta"]
        data.lc.data["parameters"][0]  # (line, column)
        ```

    Args:
        file_path_or_contents: File path or raw YAML string.

    Returns:
        Dictionary with line/column metadata.
    """
    base_dir: pathlib.Path | None = None

    if isinstance(file_path_or_contents, pathlib.Path):
        if not file_path_or_contents.exists():
            message = f"The input file `{file_path_or_contents}` doesn't exist!"
            raise UvlUserError(message)

        if file_path_or_contents.suffix not in ACCEPTED_EXTENSIONS:
            message = (
                "The input file should have one of the following extensions:"
                f" {', '.join(ACCEPTED_EXTENSIONS)}. The input file is"
                f" {file_path_or_contents.name}."
            )
            raise UvlUserError(message)

        base_dir = file_path_or_contents.parent
        file_content = file_path_or_contents.read_text(encoding="utf-8")
    else:
        file_content = file_path_or_contents

    try:
        yaml_as_dictionary: CommentedMap = _build_yaml_parser(base_dir).load(
            file_content
        )
    except ruamel.yaml.YAMLError as e:
        message = f"The input file is not valid YAML: {e}"
        raise UvlUserError(message) from e

    if yaml_as_dictionary is None:
        message = "The input file is empty!"
        raise UvlUserError(message)

    if isinstance(yaml_as_dictionary, str):
        message = (
            "A string was passed where a YAML file path was expected; pass"
            f" `pathlib.Path({file_path_or_contents!r})` instead."
        )
        raise UvlInternalError(message)

    return yaml_as_dictionary


class ScannerNoAlias(RoundTripScanner):
    """Scanner that treats `*` as a plain character, so `value: *` is a wildcard."""

    def fetch_alias(self):
        self.fetch_plain()


ruamel.yaml.scanner.RoundTripScanner = ScannerNoAlias  # ty: ignore[invalid-assignment]
