import os
from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "25")), deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def as_matrix(rows):
    return np.array([[Fraction(x) for x in r] for r in rows], dtype=object)
