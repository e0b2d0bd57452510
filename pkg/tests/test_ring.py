import numpy as np
import pytest

from spotty.errors import ConfigurationError, ParseError
from spotty.ring import RingSpec, make_ring, principal_ideal

ALL = [("IntegersMod", 4), ("IntegersMod", 6), ("PrimeField", 5), ("ChainRing", 2, 2),
       ("ChainRing", 2, 3), ("ChainRing", 3, 2), ("Rk", 1), ("Rk", 2)]


@pytest.fixture(params=ALL, ids=lambda p: "-".join(map(str, p)))
def ring(request):
    return make_ring(*request.param)


def test_ring_axioms(ring):
    e = ring.elements()
    A, M = ring.add_table, ring.mul_table
    assert np.array_equal(A, A.T) and np.array_equal(M, M.T)
    for a in e:
        assert ring.add(a, 0) == a and ring.mul(a, 1) == a
        assert ring.add(a, ring.neg(a)) == 0
    # associativity and distributivity, checked as whole tables
    assert np.array_equal(A[A[:, :, None], e[None, None, :]], A[e[:, None, None], A[None, :, :]])
    assert np.array_equal(M[M[:, :, None], e[None, None, :]], M[e[:, None, None], M[None, :, :]])
    lhs = M[e[:, None, None], A[None, :, :]]
    rhs = A[M[:, :, None], M[:, None, :]]
    assert np.array_equal(lhs, rhs)


def test_generating_character(ring):
    # no nonzero principal ideal lies in the kernel of the character
    for a in ring.elements()[1:]:
        ideal = principal_ideal(ring, a)
        assert any(ring.char_exponent(x) != 0 for x in ideal)


def test_character_is_additive(ring):
    m = ring.char_order
    for a in ring.elements():
        for b in ring.elements():
            assert ring.char_exponent(ring.add(a, b)) == (ring.char_exponent(a) + ring.char_exponent(b)) % m


def test_format_parse_round_trip(ring):
    for a in ring.elements():
        assert ring.parse_element(ring.format_element(a)) == a


def test_r2_indices_and_lee_weights():
    r2 = make_ring("Rk", 2)
    assert r2.size == 16
    assert [r2.format_element(a) for a in (1, 2, 4, 8, 15)] == ["1", "u", "v", "uv", "1 + u + v + uv"]
    by_weight = {w: sorted(r2.format_element(a) for a in range(16) if r2.lee_weight(a) == w) for w in range(5)}
    assert by_weight[1] == sorted(["1", "1 + u", "1 + v", "1 + u + v + uv"])
    assert by_weight[3] == sorted(["1 + uv", "1 + u + uv", "1 + v + uv", "1 + u + v"])
    assert by_weight[4] == ["uv"]
    assert len(by_weight[2]) == 6


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lee_weight_counts_binomial(k):
    from math import comb
    r = make_ring("Rk", k)
    w = r.lee_weight(r.elements())
    for i in range(2 ** k + 1):
        assert int(np.count_nonzero(w == i)) == comb(2 ** k, i)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_gray_map_is_bijective_isometry(k):
    r = make_ring("Rk", k)
    images = {tuple(r.gray_map(a)) for a in r.elements()}
    assert len(images) == r.size
    for a in r.elements():
        assert sum(r.gray_map(a)) == r.lee_weight(a)


def test_rk_monomials_square_to_zero():
    r = make_ring("Rk", 3)
    for a in ("u1", "u2", "u3", "u1u2", "u1u2u3"):
        x = r.parse_element(a)
        assert r.mul(x, x) == 0


def test_spec_validation():
    for bad in [("GaloisRing", 4), ("PrimeField", 6), ("Rk", 5), ("IntegersMod", 1), ("ChainRing", 4, 2), ("Nope", 2)]:
        with pytest.raises(ConfigurationError):
            make_ring(*bad)
    assert str(RingSpec("Rk", (2,))) == "Rk(2)"
    assert make_ring("Rk", 2) is make_ring(RingSpec("Rk", (2,)))


def test_parse_errors():
    with pytest.raises(ParseError):
        make_ring("Rk", 2).parse_element("q")
    with pytest.raises(ParseError):
        make_ring("IntegersMod", 4).parse_element("u")
