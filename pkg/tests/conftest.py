import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fracgft.classify import ClassParams, coefficient_functional
from fracgft.series import GapSeries

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

unit = st.floats(min_value=0.01, max_value=1.0, allow_nan=False)


@st.composite
def class_params(draw, k_max=6):
    mu = draw(unit)
    tau = draw(st.floats(min_value=mu, max_value=1.0))
    gamma = draw(st.floats(min_value=0.0, max_value=0.999 * (1.0 - (tau - mu))))
    delta = draw(st.floats(min_value=0.0, max_value=0.999))
    k = draw(st.integers(1, k_max))
    return ClassParams(k, tau, mu, delta, gamma)


@st.composite
def gap_series(draw, k, max_terms=8, span=24):
    nus = draw(st.lists(st.integers(k + 1, k + span), min_size=0, max_size=max_terms, unique=True))
    coeffs = {nu: draw(st.floats(min_value=0.0, max_value=2.0)) for nu in nus}
    return GapSeries(k, coeffs)


@st.composite
def members(draw, k_max=6):
    """(params, member) pairs with the functional anywhere in [0, 1-γ]."""
    p = draw(class_params(k_max))
    f = draw(gap_series(p.k))
    value = coefficient_functional(f, p)
    if value == 0:
        return p, f
    u = draw(st.floats(min_value=0.0, max_value=1.0))
    scale = u * (1.0 - p.gamma) / value
    return p, GapSeries(p.k, {nu: a * scale for nu, a in f.coeffs.items()})


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; the assertion that follows decides the test outcome."""

    def record(number: int, ok: bool, detail: str) -> bool:
        _CRITERIA[number] = (bool(ok), detail)
        return bool(ok)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok, detail = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {detail}")
