import pathlib
from typing import cast

import pydantic


class ValidationContext(pydantic.BaseModel):
    input_file_path: pathlib.Path | None = None


def get_input_file_path(info: pydantic.ValidationInfo) -> pathlib.Path | None:
    """Extract the configuration file path from the validation context.

    Why:
        Paths in a run configuration (`masks/2015.tif`) are relative to the
        configuration file, not to the working directory the CLI runs in.

    Args:
        info: Pydantic validation info containing context.

    Returns:
        Input file path if available, otherwise None.
    """
    if isinstance(info.context, dict):
        context = cast(ValidationContext, info.context["context"])
        if context.input_file_path:
            return context.input_file_path
    return None
