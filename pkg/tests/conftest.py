import math

import numpy as np
import pytest

from sl2geom.core import ChartPoint


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_point(rng) -> ChartPoint:
    return ChartPoint(
        float(rng.uniform(-2.0, 2.0)),
        float(rng.uniform(0.2, 5.0)),
        float(rng.uniform(0.0, 2.0 * math.pi)),
    )


def random_vec(rng) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, 3)
