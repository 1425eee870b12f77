import json
from math import gcd

import pytest

from negacyclic import counting
from negacyclic.counting import ExtremeClass
from negacyclic.factorization import factor_xn
from negacyclic.finitefield import make_field


def test_count_srim_cyclic_examples():
    assert counting.count_srim_cyclic(3, 8).total == 3
    assert counting.count_srim_cyclic(5, 1).total == 1
    assert counting.count_srim_cyclic(3, 7).total == 2
    with pytest.raises(ValueError):
        counting.count_srim_cyclic(3, 6)


def test_count_scrim_cyclic_examples():
    assert counting.count_scrim_cyclic(3, 1).total == 1
    assert counting.count_scrim_cyclic(3, 7).total == 3
    assert counting.count_scrim_cyclic(3, 8).total == 3


def test_count_srim_negacyclic_examples():
    assert counting.count_srim_negacyclic(3, 0, 7).total == 2
    assert counting.count_srim_negacyclic(3, 2, 1).total == 0   # m >= nu
    # x^2 + 1 over F_3 is irreducible and self-reciprocal, so the count is 1
    # even though 3 = 3 mod 4 (nu = 2 here, not 1)
    assert counting.count_srim_negacyclic(3, 1, 1).total == 1


def test_count_scrim_negacyclic_examples():
    assert counting.count_scrim_negacyclic(3, 1, 1).total == 2
    assert counting.count_scrim_negacyclic(3, 0, 7).total == 3
    assert counting.count_scrim_negacyclic(3, 2, 1).total == 0


def test_breakdown_terms_divide_exactly():
    bd = counting.count_srim_negacyclic(3, 0, 35)
    for term in bd.terms:
        if term.member:
            assert term.phi == term.ord * term.contribution
    assert bd.total == sum(t.contribution for t in bd.terms)
    obj = json.loads(bd.to_json())
    assert obj["total"] == bd.total and obj["nu"] == 2


def test_lem2_examples():
    assert counting.lem2_check(3, 2, "srim")
    assert counting.lem2_check(3, 7, "srim")
    assert counting.lem2_check(3, 7, "scrim")
    assert counting.count_srim_negacyclic(3, 1, 1).total == \
        counting.count_srim_cyclic(3, 4).total - counting.count_srim_cyclic(3, 2).total


def test_srim_cyclic_recursive_examples():
    assert counting.count_srim_cyclic_recursive(3, 2, 1) == 3
    assert counting.count_srim_cyclic_recursive(7, 3, 1) == 5
    assert counting.count_srim_cyclic_recursive(3, 1, 7) == 4
    # the as-printed displays give the documented wrong values
    assert counting.count_srim_cyclic_recursive_as_printed(3, 2, 1) == 5
    assert counting.count_srim_cyclic_recursive_as_printed(7, 3, 1) == 9


def test_srim_negacyclic_recursive_examples():
    assert counting.count_srim_negacyclic_recursive(3, 0, 7) == 2
    assert counting.count_srim_negacyclic_recursive(3, 1, 7) == 3
    assert counting.count_srim_negacyclic_recursive(3, 1, 1) == 1
    assert counting.count_srim_negacyclic_recursive_as_printed(3, 1, 1) == 3


def test_scrim_recursive_examples():
    assert counting.count_scrim_cyclic_recursive(3, 1, 1) == 2
    assert counting.count_scrim_cyclic_recursive(3, 3, 1) == 4
    assert counting.count_scrim_cyclic_recursive(3, 0, 7) == 3
    assert counting.count_scrim_negacyclic_recursive(3, 1, 1) == 2
    assert counting.count_scrim_negacyclic_recursive(3, 2, 1) == 0
    assert counting.count_scrim_negacyclic_recursive(3, 0, 7) == 3


def test_scrim_pure_two_power_special_case():
    # |SCRIM factors of x^(2^m) + 1| is 2^m below nu and 0 at or beyond
    for q in (3, 5, 7, 9, 11, 13):
        nu = counting.nu_of(q)
        for m in range(0, 6):
            expect = 2 ** m if m < nu else 0
            assert counting.count_scrim_negacyclic(q, m, 1).total == expect


def test_scrim_count_equality_below_nu():
    # |SCRIM(x^n + 1)| == |SCRIM(x^n - 1)| for 2-parts below nu
    for q in (3, 5, 7, 9, 11, 13, 25, 27):
        nu = counting.nu_of(q)
        for n_prime in (1, 5, 7, 11):
            if gcd(n_prime, q) != 1:
                continue
            for m in range(0, nu):
                n = 2 ** m * n_prime
                assert (counting.count_scrim_negacyclic(q, m, n_prime).total
                        == counting.count_scrim_cyclic(q, n).total)


def test_classify_extreme_srim():
    assert counting.classify_extreme_srim(3, 7) is ExtremeClass.ALL_SELF
    assert counting.classify_extreme_srim(3, 1) is ExtremeClass.ALL_SELF
    assert counting.classify_extreme_srim(3, 35) is ExtremeClass.MIXED
    assert counting.classify_extreme_srim(3, 13) is ExtremeClass.ONLY_X_PLUS_ONE
    with pytest.raises(ValueError):
        counting.classify_extreme_srim(3, 8)


def test_classify_extreme_scrim():
    assert counting.classify_extreme_scrim(3, 7) is ExtremeClass.ALL_SELF
    assert counting.classify_extreme_scrim(3, 5) is ExtremeClass.ONLY_X_PLUS_ONE
    assert counting.classify_extreme_scrim(3, 35) is ExtremeClass.MIXED


def test_two_prime_srim():
    # q=3, l1=7 (s=1), l2=5 (s=2): unequal positive case; ground truth is the
    # tagged count of x^35 + 1 over F_3
    got = counting.count_two_prime_srim(3, 7, 1, 5, 1)
    truth = factor_xn(make_field(3, 1), 35, -1).s
    assert got == truth == 3
    # s1 >= 1, s2 = 0 case: 13 has ord_13(3) = 3 odd
    got = counting.count_two_prime_srim(3, 7, 1, 13, 1)
    assert got == counting.count_srim_negacyclic(3, 0, 7).total == 2
    assert got == factor_xn(make_field(3, 1), 91, -1).s
    # both s = 0
    assert counting.count_two_prime_srim(3, 13, 2, 23, 1) == 1
    with pytest.raises(ValueError):
        counting.count_two_prime_srim(3, 7, 1, 7, 1)


def test_two_prime_scrim():
    assert counting.count_two_prime_scrim(3, 5, 1, 13, 1) == 1
    # s1 = 1, s2 = 2: SCRIM count of the 7-power part alone
    got = counting.count_two_prime_scrim(3, 7, 1, 5, 1)
    assert got == counting.count_scrim_negacyclic(3, 0, 7).total == 3
    assert got == factor_xn(make_field(3, 2), 35, -1, "hermitian").s
    # s1 = 1, s2 = 0 (ord_11(3) = 5): single-prime case, equals 3
    assert counting.count_two_prime_scrim(3, 7, 1, 11, 1) == 3


def test_counts_match_factorization_spot():
    f5 = make_field(5, 1)
    f25 = make_field(5, 2)
    for n in (4, 6, 9, 12, 13, 26):
        m = 0
        while n % 2 ** (m + 1) == 0:
            m += 1
        n_prime = n >> m
        assert counting.count_srim_negacyclic(5, m, n_prime).total == \
            factor_xn(f5, n, -1).s
        assert counting.count_scrim_negacyclic(5, m, n_prime).total == \
            factor_xn(f25, n, -1, "hermitian").s
        assert counting.count_srim_cyclic(5, n).total == factor_xn(f5, n, +1).s
        assert counting.count_scrim_cyclic(5, n).total == \
            factor_xn(f25, n, +1, "hermitian").s
