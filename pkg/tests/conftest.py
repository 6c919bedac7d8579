import os

from hypothesis import HealthCheck, settings, strategies as st

from hyperconv.harness.enumerate import spaces_up_to
from hyperconv.space import discrete, sierpinski

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_SPACES = spaces_up_to(3, t0_only=False)
SMALL_T0 = spaces_up_to(3, t0_only=True)
T0_UP_TO_4 = spaces_up_to(4, t0_only=True)

small_spaces = st.sampled_from(SMALL_SPACES)
small_t0 = st.sampled_from(SMALL_T0)
spaces_4 = st.sampled_from(T0_UP_TO_4)


@st.composite
def space_and_subset(draw, spaces=small_spaces):
    X = draw(spaces)
    return X, draw(st.integers(0, X.full))


@st.composite
def space_and_kernel(draw, spaces=small_t0):
    """A space with a nonempty hyperset of its opens."""
    X = draw(spaces)
    m = len(X.opens)
    return X, draw(st.integers(1, (1 << m) - 1))


SIERPINSKI = sierpinski()
D2 = discrete(2)
D3 = discrete(3)


# acceptance verdicts, echoed in the terminal summary so they survive output capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
