import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import class_params, gap_series, members
from fracgft.classify import ClassParams, coefficient_functional, extremal, is_member
from fracgft.closure import (
    WeightVector,
    average,
    convex_combination,
    hadamard_order,
    hadamard_with_order,
    segment,
    xi_profile,
)
from fracgft.errors import DomainError, GapMismatchError, NonMemberError
from fracgft.oracle import random_member
from fracgft.series import GapSeries, identity


def test_average_and_segment_examples():
    f, g = GapSeries(1, {2: 0.5}), GapSeries(1, {2: 0.1, 4: 0.2})
    assert average(f, g) == GapSeries(1, {2: 0.3, 4: 0.1})
    assert segment(f, g, 0.0) == f and segment(f, g, 1.0) == g
    mid = segment(f, g, 0.25)
    assert mid.coefficient(2) == pytest.approx(0.4) and mid.coefficient(4) == pytest.approx(0.05)
    for eta in (-0.01, 1.01):
        with pytest.raises(DomainError):
            segment(f, g, eta)


def test_weight_validation():
    f = identity(1)
    assert convex_combination([f, f, f], [0.2, 0.3, 0.5]) == f
    for bad in ([], [0.5, 0.6], [1.2, -0.2], [float("nan"), 1.0]):
        with pytest.raises(DomainError):
            WeightVector(tuple(bad))
    with pytest.raises(DomainError):
        convex_combination([f, f], [1.0])
    with pytest.raises(GapMismatchError):
        average(identity(1), identity(2))


@given(
    st.integers(1, 4).flatmap(lambda k: st.tuples(st.just(k), st.lists(gap_series(k), min_size=1, max_size=5))),
    st.data(),
)
def test_functional_is_linear_over_combinations(kfs, data):
    k, fs = kfs
    raw = data.draw(st.lists(st.floats(0.0, 1.0), min_size=len(fs), max_size=len(fs)))
    total = sum(raw)
    q = [x / total for x in raw] if total > 0 else [1.0 / len(fs)] * len(fs)
    q[-1] = 1.0 - sum(q[:-1])
    if q[-1] < 0:
        q[-1] = 0.0
    p = ClassParams(k, 0.8, 0.6, 0.3, 0.1)
    mix = coefficient_functional(convex_combination(fs, q), p)
    expected = sum(qj * coefficient_functional(f, p) for qj, f in zip(q, fs))
    assert mix == pytest.approx(expected, rel=1e-12, abs=1e-12)


@given(members(), st.integers(0, 2**32 - 1), st.floats(0.0, 1.0))
def test_class_closed_under_segments(pf, seed, eta):
    p, f = pf
    h = random_member(p, np.random.default_rng(seed), fill=1.0)
    assert is_member(segment(f, h, eta), p).member
    assert is_member(segment(f, extremal(p), eta), p).member


def test_hadamard_examples():
    assert hadamard_order(ClassParams(1, 0.5, 0.5, 0.0, 0.0)) == 0.0
    p = ClassParams(1, 0.5, 0.5, 0.0, 0.5)
    assert hadamard_order(p) == pytest.approx(0.75, abs=1e-15)
    omega, xi = hadamard_with_order(extremal(p), extremal(p), p)
    assert omega == GapSeries(1, {2: 0.25})
    m = is_member(omega, p, order=xi)
    assert m.member and abs(m.margin) <= 1e-10
    with pytest.raises(NonMemberError):
        hadamard_with_order(GapSeries(1, {2: 2.0}), extremal(p), p)


@given(class_params(), st.integers(0, 40))
def test_xi_profile_starts_at_order_and_increases(p, j):
    assert xi_profile(p, p.k + 1) == pytest.approx(hadamard_order(p), abs=1e-14)
    nu = p.k + 1 + j
    assert xi_profile(p, nu + 1) >= xi_profile(p, nu) - 1e-14


@given(class_params(5), st.integers(0, 2**32 - 1))
def test_hadamard_product_reaches_order(p, seed):
    rng = np.random.default_rng(seed)
    f, g = random_member(p, rng), random_member(p, rng)
    omega, xi = hadamard_with_order(f, g, p)
    assert is_member(omega, p, order=xi).member
