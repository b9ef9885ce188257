import pathlib

import pydantic

from uvlife.schema.models.validation_context import (
    ValidationContext,
    get_input_file_path,
)


class DummyModel(pydantic.BaseModel):
    path_field: str

    @pydantic.field_validator("path_field")
    @classmethod
    def capture_input_file_path(cls, _value: str, info: pydantic.ValidationInfo) -> str:
        return str(get_input_file_path(info))


class TestValidationContext:
    def test_provides_input_file_path(self):
        test_path = pathlib.Path("/runs/wuhan/config.yaml")

        model = DummyModel.model_validate(
            {"path_field": "dummy"},
            context={"context": ValidationContext(input_file_path=test_path)},
        )

        assert model.path_field == str(test_path)

    def test_uses_defaults_without_context(self):
        model = DummyModel.model_validate({"path_field": "dummy"})

        assert model.path_field == "None"
