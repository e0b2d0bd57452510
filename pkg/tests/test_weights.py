import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spotty.errors import ConfigurationError, DomainError
from spotty.ring import make_ring
from spotty.weights import (
    SpottyParams,
    byte_hamming_weights,
    ceil_div,
    hamming_weight,
    jkl,
    jkl_from_counts,
    m_spotty_distance,
    m_spotty_hamming_weight,
    m_spotty_lee_distance,
    m_spotty_lee_weight,
    pair_counts,
    spotty_case,
)

R2 = make_ring("Rk", 2)


@st.composite
def vector_triples(draw, ell=16):
    b = draw(st.integers(1, 4))
    n = draw(st.integers(1, 3))
    t = draw(st.integers(1, b))
    vec = st.lists(st.integers(0, ell - 1), min_size=b * n, max_size=b * n)
    return SpottyParams(b, t), np.array(draw(vec)), np.array(draw(vec)), np.array(draw(vec))


@settings(max_examples=200, deadline=None)
@given(vector_triples())
def test_hamming_metric_axioms(data):
    params, u, v, w = data
    d = lambda a, b: m_spotty_distance(a, b, params)
    assert d(u, u) == 0
    assert (d(u, v) == 0) == bool(np.array_equal(u, v))
    assert d(u, v) == d(v, u)
    assert d(u, w) <= d(u, v) + d(v, w)


@settings(max_examples=200, deadline=None)
@given(vector_triples())
def test_lee_metric_axioms(data):
    params, u, v, w = data
    d = lambda a, b: m_spotty_lee_distance(R2, a, b, params)
    assert d(u, u) == 0
    assert (d(u, v) == 0) == bool(np.array_equal(u, v))
    assert d(u, v) == d(v, u)
    assert d(u, w) <= d(u, v) + d(v, w)


@settings(max_examples=200, deadline=None)
@given(vector_triples())
def test_jkl_recovers_both_weights(data):
    params, u, v, _ = data
    J, K, L = jkl(u, v, params)
    assert J + L == m_spotty_hamming_weight(v, params)
    assert K + L == m_spotty_hamming_weight(u, params)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 9))
def test_spotty_case_splits_ceiling(a, b, t):
    assert ceil_div(a + b, t) == a // t + b // t + spotty_case(a, b, t)


def test_spotty_weight_basics():
    p = SpottyParams(3, 2)
    u = [1, 0, 0, 2, 3, 1]
    assert byte_hamming_weights(u, 3).tolist() == [1, 3]
    assert hamming_weight(u) == 4
    assert m_spotty_hamming_weight(u, p) == 1 + 2
    assert p.max_byte_weight == 2
    # t = 1 reduces to the Hamming weight
    assert m_spotty_hamming_weight(u, SpottyParams(3, 1)) == 4


def test_lee_weight_of_uv_bytes():
    p = SpottyParams(3, 2)
    uv = R2.parse_element("uv")
    u = [0, 0, uv, uv, 0, 0, 0, uv, uv]
    assert m_spotty_lee_weight(R2, u, p) == 2 + 2 + 4


def test_row_wise_evaluation():
    p = SpottyParams(2, 1)
    rows = np.array([[0, 0, 1, 1], [1, 0, 0, 0]])
    assert m_spotty_hamming_weight(rows, p).tolist() == [2, 1]


def test_pair_counts_and_jkl():
    assert pair_counts([0, 1, 1], [1, 1, 0]) == type(pair_counts([0], [0]))(1, 1, 1)
    assert jkl_from_counts(1, 1, 1, 2) == (1, 1, 0)


def test_validation():
    with pytest.raises(ConfigurationError):
        SpottyParams(3, 4)
    with pytest.raises(ConfigurationError):
        SpottyParams(0, 1)
    with pytest.raises(DomainError):
        m_spotty_hamming_weight([1, 2, 3], SpottyParams(2, 1))
    with pytest.raises(DomainError):
        m_spotty_distance([1, 2], [1, 2, 3, 4], SpottyParams(2, 1))
