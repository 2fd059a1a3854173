import itertools

import pytest
from hypothesis import given, strategies as st

from lrs.domain import CountingDomain, Integers, OpCounter, PrimeField, is_prime, parse_domain
from lrs.errors import DomainError, UnsupportedOperationError

SMALL_PRIMES = [2, 3, 5, 7]


def test_examples():
    assert PrimeField(2).add(1, 1) == 0
    assert Integers().add(2, -3) == -1
    assert PrimeField(5).add(3, 4) == 2
    assert PrimeField(5).inv(2) == 3
    assert Integers().mul(-1, -1) == 1
    assert PrimeField(2).is_zero(0)


def test_parse_domain():
    assert parse_domain("int") == Integers()
    assert parse_domain("gf:7") == PrimeField(7)
    assert parse_domain(" GF:2 ").spec == "gf:2"
    for bad in ["gf:4", "gf:1", "gf:x", "rational", "gf:" + str(2**64 + 13)]:
        with pytest.raises(DomainError):
            parse_domain(bad)


def test_parse_elements():
    assert Integers().parse(" -12 ") == -12
    assert PrimeField(5).parse("-1") == 4
    assert PrimeField(5).parse("12") == 2
    with pytest.raises(DomainError):
        Integers().parse("1.5")
    with pytest.raises(DomainError):
        PrimeField(3).parse("a")


def test_no_inverse_in_integers():
    with pytest.raises(UnsupportedOperationError):
        Integers().inv(1)
    with pytest.raises(UnsupportedOperationError):
        PrimeField(7).inv(0)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_is_prime_against_trial_division():
    def slow(n):
        return n > 1 and all(n % i for i in range(2, int(n**0.5) + 1))

    assert all(is_prime(n) == slow(n) for n in range(5000))
    # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime(3215031751)
    assert is_prime(2**64 - 59)


def test_large_prime_field():
    p = 2**61 - 1
    F = PrimeField(p)
    assert F.mul(F.inv(123456789), 123456789) == 1


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_field_axioms_exhaustive(p):
    F = PrimeField(p)
    els = range(p)
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(a, b) == F.add(a, F.neg(b))
        # no zero divisors
        assert (F.mul(a, b) == 0) == (a == 0 or b == 0)
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a and F.add(a, F.neg(a)) == 0


@pytest.mark.parametrize("p", [q for q in range(2, 102) if is_prime(q)])
def test_inverses(p):
    F = PrimeField(p)
    for a in range(1, p):
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(a, a) == 1


ints = st.integers(min_value=-(10**30), max_value=10**30)


@given(ints, ints, ints)
def test_integer_ring_laws(a, b, c):
    Z = Integers()
    assert Z.mul(a, Z.add(b, c)) == Z.add(Z.mul(a, b), Z.mul(a, c))
    assert Z.mul(a, Z.mul(b, c)) == Z.mul(Z.mul(a, b), c)
    assert Z.sub(Z.add(a, b), b) == a
    assert (Z.mul(a, b) == 0) == (a == 0 or b == 0)


def test_counting_domain():
    C = CountingDomain(PrimeField(5))
    C.mul(2, 3)
    C.mul(1, 4)
    C.mul(0, 2)
    C.mul(4, 3)  # 4 = -1
    C.add(1, 1)
    C.div(3, 2)
    c = C.counter
    assert (c.mults, c.trivial_mults, c.divs, c.adds) == (1, 3, 1, 1)
    assert c.raw_mults == 4
    assert (c + OpCounter(mults=2)).mults == 3
    assert C.spec == "gf:5"
