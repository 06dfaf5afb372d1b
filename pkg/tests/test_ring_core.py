import pytest
from hypothesis import given, settings, strategies as st

from gcdcert import INT, POLYZ, BezoutPair, PolyZ, verify_bezout
from gcdcert.ring import WitnessError, check_pair, pair_from_coefficients

from conftest import nonzero_polys, polys

ints = st.integers(min_value=-10**12, max_value=10**12)
RINGS = [(INT, ints), (POLYZ, polys)]


@pytest.mark.parametrize("a, b, g, u, v, expected", [
    (6, 10, 2, 2, -1, True),
    (5, 0, 5, 1, 0, True),
    (6, 10, 2, 1, 0, False),
    (6, 10, -2, -2, 1, False),  # not normalized
    (6, 10, 1, 1, 0, False),
])
def test_verify_bezout_integers(a, b, g, u, v, expected):
    assert verify_bezout(BezoutPair(a, b, g, u, v), INT) is expected


def test_verify_bezout_rejects_non_divisor():
    # 1*4 + 0*6 = 4 is a combination but 4 does not divide 6
    assert not verify_bezout(BezoutPair(4, 6, 4, 1, 0), INT)


def test_pair_from_coefficients_rescales_unit():
    pair = pair_from_coefficients(6, 10, -2, 1, INT)
    assert (pair.g, pair.u, pair.v) == (2, 2, -1)
    with pytest.raises(WitnessError):
        pair_from_coefficients(6, 10, 1, 0, INT)


def test_check_pair_accepts_swapped_orientation():
    pair = check_pair(BezoutPair(10, 6, 2, -1, 2), 6, 10, INT)
    assert (pair.a, pair.b, pair.u, pair.v) == (6, 10, 2, -1)


@pytest.mark.parametrize("ring, elems", RINGS, ids=["int", "polyz"])
def test_ring_axioms(ring, elems):
    @settings(max_examples=150, deadline=None)
    @given(elems, elems, elems)
    def check(a, b, c):
        add, mul = ring.add, ring.mul
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert add(a, ring.zero) == a
        assert mul(a, ring.one) == a
        assert add(a, ring.neg(a)) == ring.zero

    check()


@pytest.mark.parametrize("ring, elems, units", [
    (INT, ints, [1, -1]),
    (POLYZ, polys, [PolyZ([1]), PolyZ([-1])]),
], ids=["int", "polyz"])
def test_normalize_idempotent_and_associate_stable(ring, elems, units):
    @settings(max_examples=150, deadline=None)
    @given(elems)
    def check(a):
        n = ring.normalize(a)
        assert ring.normalize(n) == n
        for e in units:
            assert ring.normalize(ring.mul(e, a)) == n
        assert ring.mul(ring.normalizing_unit(a), a) == n

    check()


@pytest.mark.parametrize("ring, elems, nonzero", [
    (INT, ints, ints.filter(bool)),
    (POLYZ, polys, nonzero_polys),
], ids=["int", "polyz"])
def test_exact_div_inverts_mul(ring, elems, nonzero):
    @settings(max_examples=150, deadline=None)
    @given(elems, nonzero)
    def check(a, b):
        assert ring.exact_div(ring.mul(a, b), b) == a

    check()


@pytest.mark.parametrize("ring, elems", RINGS, ids=["int", "polyz"])
def test_gcd_contract(ring, elems):
    @settings(max_examples=100, deadline=None)
    @given(elems, elems)
    def check(a, b):
        g = ring.gcd(a, b)
        assert g == ring.normalize(g)
        assert ring.divides(g, a) and ring.divides(g, b)
        assert ring.gcd(a, ring.zero) == ring.normalize(a)

    check()


@pytest.mark.parametrize("ring", [INT, POLYZ], ids=["int", "polyz"])
def test_exact_div_by_zero_raises(ring):
    with pytest.raises(ZeroDivisionError):
        ring.exact_div(ring.one, ring.zero)
