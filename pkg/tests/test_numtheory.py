import pytest

from negacyclic.numtheory import (FactoredInt, PrimePower, additive_ord,
                                  euler_phi, exact_divide, factorize, is_good,
                                  is_good_oracle, is_oddly_good,
                                  is_oddly_good_oracle, is_prime, mult_ord)


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(28).factors == ((2, 2), (7, 1))
    assert factorize(27).factors == ((3, 3),)
    with pytest.raises(ValueError):
        factorize(0)


def test_factored_divisors():
    assert factorize(28).divisors() == [1, 2, 4, 7, 14, 28]
    assert factorize(1).divisors() == [1]


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(4) == 2
    assert euler_phi(28) == 12
    for n in range(1, 1001):
        direct = sum(1 for k in range(1, n + 1) if __import__("math").gcd(k, n) == 1)
        assert euler_phi(n) == direct


def test_mult_ord():
    assert mult_ord(3, 1) == 1
    assert mult_ord(3, 5) == 4
    assert mult_ord(3, 7) == 6
    with pytest.raises(ValueError):
        mult_ord(3, 6)
    # order divides phi on a grid
    for n in range(2, 200):
        for a in (2, 3, 5, 7):
            if __import__("math").gcd(a, n) != 1:
                continue
            assert euler_phi(n) % mult_ord(a, n) == 0


def test_additive_ord():
    assert additive_ord(0, 8) == 1
    assert additive_ord(6, 8) == 4
    assert additive_ord(3, 8) == 8
    with pytest.raises(ValueError):
        additive_ord(1, 0)


def test_exact_divide():
    assert exact_divide(2, 7) == 0
    assert exact_divide(2, 12) == 2
    assert exact_divide(3, 18) == 2
    with pytest.raises(ValueError):
        exact_divide(4, 12)
    with pytest.raises(ValueError):
        exact_divide(2, 0)


def test_good_examples():
    assert is_good(1, 3)
    assert is_good(5, 3)          # 5 | 3^2 + 1
    assert not is_good(8, 3)      # 8 does not divide 3+1
    assert is_oddly_good(7, 3)    # 7 | 3^3 + 1
    assert not is_oddly_good(5, 3)
    assert is_oddly_good(4, 3)    # 4 | 3 + 1
    with pytest.raises(ValueError):
        is_good(3, 3)
    with pytest.raises(ValueError):
        is_good(5, 4)


def test_oracles_match_examples():
    assert is_good_oracle(5, 3) and not is_oddly_good_oracle(5, 3)
    assert is_good_oracle(7, 3) and is_oddly_good_oracle(7, 3)
    assert is_good_oracle(1, 5) and is_oddly_good_oracle(1, 5)


def test_two_power_rule():
    # 2^beta is good iff oddly good iff 2^beta | q + 1
    for q in (3, 5, 7, 9, 11, 13):
        for beta in range(1, 7):
            d = 1 << beta
            expected = (q + 1) % d == 0
            assert is_good(d, q) == expected
            assert is_oddly_good(d, q) == expected


def test_prime_power():
    pp = PrimePower.from_order(27)
    assert (pp.p, pp.e) == (3, 3)
    with pytest.raises(ValueError):
        PrimePower.from_order(12)
    with pytest.raises(ValueError):
        PrimePower(4, 1, 4)


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
