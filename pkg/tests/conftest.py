import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))  # for oracle_reference

from divbound import STRICT, validate

settings.register_profile(
    "divbound",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("divbound")


def make_pair(rng: np.random.Generator, n: int):
    """Strict random pair: normalised exponentials of standard normals."""
    out = []
    for _ in range(2):
        w = np.exp(rng.standard_normal(n))
        out.append(validate(w / w.sum(), STRICT))
    return out[0], out[1]


@pytest.fixture
def canonical_pair():
    """The worked example pair used throughout the frozen-value tests."""
    return validate([0.5, 0.5]), validate([0.25, 0.75])


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
