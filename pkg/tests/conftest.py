from hypothesis import HealthCheck, settings

# Exact arithmetic on big integers makes individual examples slow but never
# flaky, so wall-clock deadlines only add noise.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
