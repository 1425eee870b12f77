import itertools
import random

import pytest

from negacyclic.finitefield import make_field
from negacyclic.polyring import (Poly, is_irreducible, is_irreducible_trial,
                                 x_poly, xn_minus)

F3 = make_field(3, 1)
F9 = make_field(3, 2)


def _rand_poly(ctx, deg, rng, monic=True, nonzero_const=True):
    coeffs = [tuple(rng.randrange(ctx.p) for _ in range(ctx.e)) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = ctx.one
    if nonzero_const and coeffs[0] == ctx.zero:
        coeffs[0] = ctx.one
    return Poly(ctx, coeffs)


def test_divrem_and_gcd_examples():
    f = Poly.from_ints(F3, [2, 1, 1])    # x^2 + x + 2
    g = Poly.from_ints(F3, [2, 2, 1])    # x^2 + 2x + 2
    assert f.gcd(g) == Poly.one(F3)
    assert f.gcd(f) == f
    q, r = xn_minus(F3, 4, -1).divrem(f)
    assert r.degree < 0 and q == g
    assert Poly.zero(F3).gcd(f) == f     # gcd(f, 0) = monic(f)
    with pytest.raises(ZeroDivisionError):
        f.divrem(Poly.zero(F3))


def test_divrem_reconstructs():
    rng = random.Random(3)
    for _ in range(40):
        a = _rand_poly(F9, rng.randrange(1, 9), rng, monic=False, nonzero_const=False)
        b = _rand_poly(F9, rng.randrange(1, 5), rng, monic=False, nonzero_const=False)
        if not b:
            continue
        q, r = a.divrem(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_reciprocal_star():
    assert Poly.from_ints(F3, [2, 1]).reciprocal_star() == Poly.from_ints(F3, [2, 1])
    assert Poly.from_ints(F3, [2, 1, 1]).reciprocal_star() == Poly.from_ints(F3, [2, 2, 1])
    assert Poly.one(F3).reciprocal_star() == Poly.one(F3)
    with pytest.raises(ValueError):
        Poly.from_ints(F3, [0, 1]).reciprocal_star()
    with pytest.raises(ValueError):
        Poly.zero(F3).reciprocal_star()


def test_star_involution_and_multiplicativity():
    rng = random.Random(5)
    for _ in range(40):
        f = _rand_poly(F3, rng.randrange(1, 8), rng)
        g = _rand_poly(F3, rng.randrange(1, 8), rng)
        assert f.reciprocal_star().reciprocal_star() == f
        assert (f * g).reciprocal_star() == f.reciprocal_star() * g.reciprocal_star()


def test_conjugate_and_dagger():
    alpha = F9.element([0, 1])
    f = Poly(F9, [F9.neg(alpha), F9.one])          # x - alpha
    assert f.conjugate(3) == Poly(F9, [alpha, F9.one])
    assert f.conjugate(3).conjugate(3) == f
    assert f.dagger(3) == f                         # x - alpha is SCRIM at n = 2
    g = Poly.from_ints(F9, [2, 1, 1])
    assert g.conjugate(3) == g                      # subfield coefficients fixed


def test_dagger_involution():
    rng = random.Random(9)
    for _ in range(40):
        f = _rand_poly(F9, rng.randrange(1, 7), rng)
        assert f.dagger(3).dagger(3) == f
        g = _rand_poly(F9, rng.randrange(1, 7), rng)
        assert (f * g).dagger(3) == f.dagger(3) * g.dagger(3)


def test_self_reciprocal_predicates():
    assert Poly.from_ints(F3, [1, 0, 1]).is_self_reciprocal()
    assert not Poly.from_ints(F3, [2, 1, 1]).is_self_reciprocal()
    assert Poly.from_ints(F3, [1, 1]).is_self_reciprocal()


def test_is_irreducible_examples():
    assert is_irreducible(Poly.from_ints(F3, [1, 0, 1]))
    assert not is_irreducible(Poly.from_ints(F3, [2, 0, 1]))
    assert not is_irreducible(Poly.from_ints(F3, [1, 0, 0, 0, 1]))
    with pytest.raises(ValueError):
        is_irreducible(Poly.from_ints(F3, [1, 2]))  # leading coefficient 2


@pytest.mark.parametrize("ctx", [F3, make_field(5, 1)])
def test_irreducible_agrees_with_trial_division(ctx):
    # exhaustive monic polynomials of degree <= 4 with the q-power criterion
    # cross-checked against trial division (degree 6 sampled below)
    for deg in (2, 3, 4):
        for lows in itertools.product(range(ctx.p), repeat=deg):
            f = Poly.from_ints(ctx, list(lows) + [1])
            assert is_irreducible(f) == is_irreducible_trial(f)


def test_irreducible_trial_degree_six_samples():
    rng = random.Random(17)
    for _ in range(12):
        f = _rand_poly(F3, 6, rng)
        assert is_irreducible(f) == is_irreducible_trial(f)


def test_pow_mod_and_eval():
    f = Poly.from_ints(F3, [1, 0, 1])
    x = x_poly(F3)
    assert x.pow_mod(9, f) == x % f          # x^(q^2) = x mod irreducible quadratic
    g = Poly.from_ints(F3, [2, 1, 1])
    assert g.eval(F3.element(1)) == F3.element(1)
    assert g.eval(F3.element(0)) == F3.element(2)


def test_text_roundtrip():
    for poly in (Poly.from_ints(F3, [2, 1, 1]), Poly.zero(F3), Poly.one(F3)):
        assert Poly.from_text(F3, poly.to_text()) == poly
    h = Poly(F9, [F9.element([0, 2]), F9.one])
    assert h.to_text() == "[0 2],[1 0]"
    assert Poly.from_text(F9, h.to_text()) == h
