import os

import pytest
from hypothesis import HealthCheck, settings

from pbwelim import fixtures

settings.register_profile(
    "ci", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def alg():
    """Fresh parsed fixture algebra by name (fresh caches per test)."""
    return lambda name: fixtures.load_algebra(name).presentation


@pytest.fixture
def ideal():
    return lambda name: fixtures.load_ideal(name)
