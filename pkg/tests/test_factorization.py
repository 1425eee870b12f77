from dataclasses import replace
from math import gcd

import pytest

from negacyclic.cosets import coset, representatives
from negacyclic.factorization import (FactorRecord, decompose_length, factor_xn,
                                      minimal_poly_from_coset, report_from_json,
                                      report_to_json, verify_report)
from negacyclic.finitefield import make_field, primitive_root_of_unity
from negacyclic.numtheory import euler_phi, mult_ord
from negacyclic.polyring import Poly, is_irreducible

F3 = make_field(3, 1)
F9 = make_field(3, 2)


def test_decompose_length():
    assert decompose_length(12, 3) == (1, 2, 1)
    assert decompose_length(7, 3) == (0, 0, 7)
    assert decompose_length(1, 5) == (0, 0, 1)
    assert decompose_length(54, 3) == (3, 1, 1)
    with pytest.raises(ValueError):
        decompose_length(0, 3)


def test_minimal_poly_examples():
    alpha = primitive_root_of_unity(F9, 8)
    f = minimal_poly_from_coset(coset(3, 8, 2), alpha, F3)
    assert f == Poly.from_ints(F3, [1, 0, 1])
    g = minimal_poly_from_coset(coset(3, 8, 1), alpha, F3)
    assert g in (Poly.from_ints(F3, [2, 1, 1]), Poly.from_ints(F3, [2, 2, 1]))
    one = minimal_poly_from_coset(coset(3, 8, 0), alpha, F3)
    assert one == Poly.from_ints(F3, [2, 1])  # x - 1


def test_minimal_poly_rejects_mismatched_multiplier():
    alpha = primitive_root_of_unity(F9, 8)
    with pytest.raises(ValueError):
        # coset built with multiplier 9 is not Frobenius-stable over F_3
        minimal_poly_from_coset(coset(9, 8, 1), alpha, F3)


@pytest.mark.parametrize("q,n", [(3, 8), (3, 16), (3, 20), (5, 12), (9, 8), (5, 24)])
def test_engine_matches_root_of_unity_construction(q, n):
    """The sweep-scale construction and the direct product over root powers
    must produce the same set of irreducible factors of x^n - 1."""
    from negacyclic.numtheory import PrimePower
    pp = PrimePower.from_order(q)
    base = make_field(pp.p, pp.e)
    ord_n = mult_ord(q, n)
    big = make_field(pp.p, pp.e * ord_n)
    alpha = primitive_root_of_unity(big, n)
    direct = {minimal_poly_from_coset(cs, alpha, base) for cs in representatives(q, n)}
    report = factor_xn(base, n, +1)
    assert {rec.poly for rec in report.records} == direct


def test_factor_x4_plus_1_over_f3():
    report = factor_xn(F3, 4, -1)
    assert (report.r, report.s, report.t) == (2, 0, 1)
    polys = {rec.poly for rec in report.records}
    assert polys == {Poly.from_ints(F3, [2, 1, 1]), Poly.from_ints(F3, [2, 2, 1])}
    a, b = report.records
    assert a.partner == 1 and b.partner == 0


def test_factor_x2_plus_1_over_f3():
    report = factor_xn(F3, 2, -1)
    assert (report.r, report.s) == (1, 1)
    assert report.records[0].poly == Poly.from_ints(F3, [1, 0, 1])


def test_factor_hermitian_n2():
    report = factor_xn(F9, 2, -1, "hermitian")
    assert (report.r, report.s) == (2, 2)
    alpha = F9.element([0, 1])
    polys = {rec.poly for rec in report.records}
    assert polys == {Poly(F9, [alpha, F9.one]), Poly(F9, [F9.neg(alpha), F9.one])}


def test_repeated_roots_multiplicity():
    report = factor_xn(F3, 12, -1)
    assert report.mu == 1
    assert all(rec.multiplicity == 3 for rec in report.records)
    report = factor_xn(F3, 9, -1)
    assert report.mu == 2
    assert [rec.poly for rec in report.records] == [Poly.from_ints(F3, [1, 1])]
    assert report.records[0].multiplicity == 9


def test_x_plus_one_always_srim_factor():
    for q, ctx in ((3, F3), (5, make_field(5, 1))):
        for n in range(1, 36, 2):
            if gcd(n, q) != 1:
                continue
            report = factor_xn(ctx, n, -1)
            x1 = Poly.from_ints(ctx, [1, 1])
            recs = [rec for rec in report.records if rec.poly == x1]
            assert len(recs) == 1 and recs[0].is_self


def test_partition_degree_counts():
    # within each additive-order class, #records = phi(D) / ord_D(q)
    report = factor_xn(F3, 40, -1)
    from negacyclic.numtheory import additive_ord
    by_order = {}
    for rec in report.records:
        D = additive_ord(rec.coset_rep, 80)
        by_order.setdefault(D, []).append(rec)
    for D, recs in by_order.items():
        size = mult_ord(3, D)
        assert all(rec.poly.degree == size for rec in recs)
        assert len(recs) == euler_phi(D) // size


def test_all_factors_irreducible_spot():
    report = factor_xn(F3, 28, -1)
    for rec in report.records:
        assert is_irreducible(rec.poly)


def test_verify_report_roundtrip_and_mutations():
    report = factor_xn(F3, 8, -1)
    ok, msg = verify_report(report)
    assert ok, msg

    # perturb one coefficient: product identity must fail
    rec = report.records[0]
    coeffs = list(rec.poly.coeffs)
    coeffs[0] = rec.poly.ctx.add(coeffs[0], rec.poly.ctx.one)
    bad_poly = Poly(rec.poly.ctx, coeffs)
    bad = replace(report, records=(FactorRecord(bad_poly, rec.multiplicity,
                                                rec.coset_rep, rec.partner),)
                  + report.records[1:])
    ok, msg = verify_report(bad, deep=False)
    assert not ok and msg

    # swap a self tag onto a paired record: tag violation
    paired = next(r for r in report.records if not r.is_self)
    idx = report.records.index(paired)
    swapped = list(report.records)
    swapped[idx] = FactorRecord(paired.poly, paired.multiplicity,
                                paired.coset_rep, None)
    bad = replace(report, records=tuple(swapped))
    ok, msg = verify_report(bad, deep=False)
    assert not ok and "involution" in msg


def test_json_roundtrip():
    for report in (factor_xn(F3, 8, -1), factor_xn(F9, 6, -1, "hermitian"),
                   factor_xn(F3, 10, +1)):
        text = report_to_json(report)
        again = report_from_json(text)
        assert report_to_json(again) == text
        assert again == report


def test_bad_arguments():
    with pytest.raises(ValueError):
        factor_xn(F3, 4, 0)
    with pytest.raises(ValueError):
        factor_xn(F3, 4, -1, "unitary")
    with pytest.raises(ValueError):
        factor_xn(F3, 4, -1, "hermitian")  # odd extension degree
    with pytest.raises(ValueError):
        factor_xn(make_field(2, 1), 3, -1)
