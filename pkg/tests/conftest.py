import numpy as np
import pytest

from scancarrier.core.config import settings
from scancarrier.utils.helpers import set_log_level

from helpers import FIXTURES


@pytest.fixture(autouse=True)
def reset_settings():
    yield
    settings.reset()
    set_log_level("WARNING")


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
