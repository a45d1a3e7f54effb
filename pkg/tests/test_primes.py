import pytest

from cyclicup.primes import (
    PrimeRecord,
    factorize,
    is_prime,
    legendre,
    mersenne,
    ord_half,
    ord_lt_eps,
    ord_mod,
    predicate,
    primitive_root,
    search_primes,
    split_in_Kql,
)


def naive_order(a, p):
    x, k = a % p, 1
    while x != 1:
        x = x * a % p
        k += 1
    return k


def naive_primes(n):
    return [k for k in range(2, n) if all(k % d for d in range(2, int(k**0.5) + 1))]


def test_is_prime_matches_trial_division():
    small = set(naive_primes(5000))
    assert all(is_prime(n) == (n in small) for n in range(5000))


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3_215_031_751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_factorize_roundtrip():
    for n in (1, 2, 360, 2**13 - 2, 8190, 999_983 * 2, 2**40 - 1):
        f = factorize(n)
        prod = 1
        for q, e in f.items():
            assert is_prime(q)
            prod *= q**e
        assert prod == n


@pytest.mark.parametrize("ell,p,expected", [(2, 7, 3), (2, 11, 10), (12, 11, 1), (2, 23, 11), (3, 7, 6)])
def test_ord_mod_examples(ell, p, expected):
    assert ord_mod(ell, p) == expected


def test_ord_mod_matches_naive():
    for p in naive_primes(400)[1:]:
        for ell in (2, 3, 5, 10):
            if ell % p:
                assert ord_mod(ell, p) == naive_order(ell, p)


def test_ord_mod_rejects_multiple():
    with pytest.raises(ValueError):
        ord_mod(14, 7)


def test_legendre_examples():
    assert legendre(2, 7) == 1
    assert legendre(2, 5) == -1
    assert legendre(7, 7) == 0


def test_search_primitive_root_2():
    got = [r.p for r in search_primes(2, 100, primitive_root(2))]
    assert got == [3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83]


def test_search_mersenne():
    assert [r.p for r in search_primes(2, 10**4, mersenne())] == [3, 7, 31, 127, 8191]


def test_search_ord_half():
    assert [r.p for r in search_primes(2, 30, ord_half())] == [7, 17, 23]


def test_qr_implies_order_at_most_half():
    for r in search_primes(3, 10**4):
        if r.is_qr:
            assert r.ord <= (r.p - 1) // 2


def test_split_hits_have_small_order():
    for q in (3, 5, 7):
        for r in search_primes(3, 5000, split_in_Kql(q, 2)):
            assert r.ord <= (r.p - 1) // q < r.p / q


def test_mersenne_order_is_exponent():
    for r in search_primes(2, 10**4, mersenne()):
        assert r.ord == (r.p + 1).bit_length() - 1


def test_record_flags_consistent():
    for r in search_primes(3, 2000):
        assert (r.p - 1) % r.ord == 0
        assert r.is_primitive_root == (r.ord == r.p - 1)
        assert r.ord_equals_half == (2 * r.ord == r.p - 1)


def test_predicates_compose_and_lookup():
    both = ord_lt_eps(0.5) & ord_half()
    assert [r.p for r in search_primes(2, 50, both)] == [7, 17, 23, 41, 47]
    assert predicate("ord_half")(17)
    with pytest.raises(ValueError):
        predicate("nope")


def test_record_row():
    row = PrimeRecord.build(7).as_row()
    assert row == {"p": 7, "ell": 2, "ord": 3, "is_mersenne": 1, "is_primitive_root": 0, "ord_equals_half": 1, "is_qr": 1}
