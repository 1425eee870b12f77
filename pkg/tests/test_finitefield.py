import random

import pytest

from negacyclic.finitefield import (RootOfUnity, SubfieldEmbedding, frobenius,
                                    make_field, primitive_root_of_unity)
from negacyclic.polyring import Poly, is_irreducible


def test_make_field_moduli():
    assert make_field(3, 1).modulus == (0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)       # x^2 + 1
    f27 = make_field(3, 3)
    assert f27.e == 3 and f27.q == 27
    assert is_irreducible(Poly.from_ints(make_field(3, 1), f27.modulus))
    with pytest.raises(ValueError):
        make_field(4, 1)


def test_make_field_deterministic():
    a = make_field(5, 2)
    b = make_field(5, 2)
    assert a is b and a.modulus == b.modulus


def test_prime_field_arithmetic():
    f3 = make_field(3, 1)
    two = f3.element(2)
    assert f3.add(two, two) == f3.element(1)
    assert f3.inv(two) == two
    with pytest.raises(ZeroDivisionError):
        f3.inv(f3.zero)


def test_f9_arithmetic():
    f9 = make_field(3, 2)
    a = f9.element([0, 1])
    assert f9.mul(a, a) == (2, 0)       # alpha^2 = -1
    assert f9.inv(a) == (0, 2)          # -alpha
    assert f9.mul(a, f9.inv(a)) == f9.one


@pytest.mark.parametrize("p,e", [(3, 1), (3, 2), (5, 2), (3, 3), (7, 1)])
def test_ring_axioms_random(p, e):
    ctx = make_field(p, e)
    rng = random.Random(7)
    elems = [tuple(rng.randrange(p) for _ in range(e)) for _ in range(12)]
    for a in elems:
        for b in elems:
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in elems[:4]:
                assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        if a != ctx.zero:
            assert ctx.mul(a, ctx.inv(a)) == ctx.one


def test_frobenius():
    f9 = make_field(3, 2)
    a = f9.element([0, 1])
    assert frobenius(f9, a, 3) == f9.neg(a)
    assert frobenius(f9, frobenius(f9, a, 3), 3) == a
    for c in range(3):
        assert frobenius(f9, f9.element(c), 3) == f9.element(c)
    with pytest.raises(ValueError):
        frobenius(f9, a, 4)


def test_frobenius_is_additive_and_multiplicative():
    ctx = make_field(5, 2)
    rng = random.Random(11)
    for _ in range(30):
        a = tuple(rng.randrange(5) for _ in range(2))
        b = tuple(rng.randrange(5) for _ in range(2))
        fa, fb = frobenius(ctx, a, 5), frobenius(ctx, b, 5)
        assert frobenius(ctx, ctx.add(a, b), 5) == ctx.add(fa, fb)
        assert frobenius(ctx, ctx.mul(a, b), 5) == ctx.mul(fa, fb)


def test_primitive_root_of_unity():
    f9 = make_field(3, 2)
    r1 = primitive_root_of_unity(f9, 1)
    assert r1.value == f9.one
    r4 = primitive_root_of_unity(f9, 4)
    assert r4.value == (0, 1)
    assert f9.mult_order(r4.value) == 4
    r8 = primitive_root_of_unity(f9, 8)
    assert f9.mult_order(r8.value) == 8
    # determinism
    assert primitive_root_of_unity(f9, 8).value == r8.value
    with pytest.raises(ValueError):
        primitive_root_of_unity(f9, 3)
    with pytest.raises(ValueError):
        RootOfUnity(f9, f9.one, 4)


def test_subfield_embedding_roundtrip():
    small = make_field(3, 2)
    big = make_field(3, 4)
    emb = SubfieldEmbedding(small, big)
    for code in range(9):
        a = small.decode(code)
        image = emb.to_big(a)
        assert frobenius(big, image, 9) == image
        assert emb.to_small(image) == a
    # multiplicativity of the embedding
    a, b = small.element([1, 2]), small.element([2, 1])
    assert emb.to_big(small.mul(a, b)) == big.mul(emb.to_big(a), emb.to_big(b))
    with pytest.raises(ValueError):
        emb.to_small(primitive_root_of_unity(big, 16).value)


def test_element_text_format():
    f3 = make_field(3, 1)
    f9 = make_field(3, 2)
    assert f3.format_elem(f3.element(2)) == "2"
    assert f9.format_elem(f9.element([0, 2])) == "[0 2]"
    assert f9.parse_elem("[0 2]") == (0, 2)
    assert f3.parse_elem("2") == (2,)
