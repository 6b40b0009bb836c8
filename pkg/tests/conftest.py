import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_MAX_EXAMPLES", "150")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def perms(min_size=0, max_size=12):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )
