from enum import Enum


class CustomPydanticErrorTypes(str, Enum):
    path = "uvl_path_error"
