"""Shared test configuration.

Property tests run exact integer/rational arithmetic whose cost varies a lot
per example, so the hypothesis deadline is disabled and example counts are
kept moderate.
"""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
