import pytest

from uvlife.lifecycle.timeline import Timeline


@pytest.fixture
def timeline() -> Timeline:
    return Timeline((2015, 2019, 2023))
