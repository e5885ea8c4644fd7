import os

from hypothesis import HealthCheck, settings, strategies as st

from flipcut.geometry import PointSet

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def point_sets(draw, min_size=3, max_size=8, bound=15):
    pts = draw(
        st.lists(
            st.tuples(st.integers(0, bound), st.integers(0, bound)),
            min_size=min_size, max_size=max_size, unique=True,
        )
    )
    return PointSet(pts)
