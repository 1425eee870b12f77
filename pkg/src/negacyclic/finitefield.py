"""Construction of and arithmetic in F_{p^e}.

A field is presented by a monic irreducible modulus over the prime field,
found deterministically as the first irreducible in ascending lexicographic
order on coefficient vectors, so that every downstream artifact is
bit-reproducible.  Elements are coordinate tuples of length e in the power
basis of the modulus root; prime-field elements are 1-tuples.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .numtheory import factorize, is_prime

__all__ = [
    "FieldCtx",
    "RootOfUnity",
    "make_field",
    "frobenius",
    "primitive_root_of_unity",
    "SubfieldEmbedding",
]

SCAN_CAP = 1 << 20  # largest field size eligible for full-element scans


# ---------------------------------------------------------------------------
# dense polynomial helpers over the prime field (coefficient tuples,
# ascending, no trailing zeros); used only for modulus search


def _pf_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pf_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        off = len(a) - 1 - dm
        for j in range(dm + 1):
            a[off + j] = (a[off + j] - c * m[j]) % p
        a = list(_pf_trim(a))
    return tuple(a)


def _pf_powmod(a, k, m, p):
    r = (1,)
    a = _pf_mod(a, m, p)
    while k:
        if k & 1:
            r = _pf_mod(_pf_mul(r, a, p), m, p)
        a = _pf_mod(_pf_mul(a, a, p), m, p)
        k >>= 1
    return r


def _pf_gcd(a, b, p):
    while b:
        a, b = b, _pf_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def _pf_is_irreducible(m, p):
    """q-power criterion for a monic polynomial over F_p."""
    d = len(m) - 1
    if d < 1:
        return False
    x = (0, 1)
    if _pf_powmod(x, p ** d, m, p) != _pf_mod(x, m, p):
        return False
    for r, _ in factorize(d).factors:
        w = _pf_powmod(x, p ** (d // r), m, p)
        diff = _pf_trim([(w[i] if i < len(w) else 0) - (x[i] if i < len(x) else 0)
                         for i in range(max(len(w), len(x)))])
        diff = tuple(c % p for c in diff)
        if _pf_gcd(diff, m, p) != (1,):
            return False
    return True


# ---------------------------------------------------------------------------


class FieldCtx:
    """Immutable context for F_{p^e} = F_p[y] / (modulus).

    modulus is the ascending coefficient tuple of a monic irreducible of
    degree e (for e = 1 the convention is y itself and arithmetic is plain
    residue arithmetic mod p).  Elements are length-e tuples of residues.
    """

    __slots__ = ("p", "e", "q", "modulus", "_red")

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        # y^(e+j) mod modulus for j = 0..e-2, used by mul
        red = []
        cur = list(modulus[:e])  # y^e = -modulus_low (monic)
        cur = [(-c) % p for c in cur]
        red.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            for i in range(e):
                nxt[i] = (nxt[i] - top * modulus[i]) % p
            cur = nxt
            red.append(tuple(cur))
        self._red = tuple(red)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, e={self.e})"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # -- element construction ------------------------------------------------

    @property
    def zero(self):
        return (0,) * self.e

    @property
    def one(self):
        return (1,) + (0,) * (self.e - 1)

    def element(self, coeffs):
        """Build an element from an int (prime subfield) or a coordinate list."""
        if isinstance(coeffs, int):
            return (coeffs % self.p,) + (0,) * (self.e - 1)
        c = tuple(int(v) % self.p for v in coeffs)
        if len(c) != self.e:
            raise ValueError(f"expected {self.e} coordinates, got {len(c)}")
        return c

    def elements(self):
        """All field elements in ascending lexicographic coordinate order."""
        if self.q > SCAN_CAP:
            raise ValueError(f"field of order {self.q} exceeds the scan cap")
        return (t for t in itertools.product(range(self.p), repeat=self.e))

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:e]]
        for j in range(e - 1):
            hi = prod[e + j] % p
            if hi:
                row = self._red[j]
                for i in range(e):
                    out[i] = (out[i] + hi * row[i]) % p
        return tuple(out)

    def scalar_mul(self, s, a):
        return tuple(x * s % self.p for x in a)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = self.one
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def mult_order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == self.zero:
            raise ZeroDivisionError("zero has no multiplicative order")
        t = self.q - 1
        for r, _ in factorize(t).factors:
            while t % r == 0 and self.pow(a, t // r) == self.one:
                t //= r
        return t

    # -- codes (dense integer encoding, a0 least significant) ----------------

    def encode(self, a):
        code = 0
        for c in reversed(a):
            code = code * self.p + c
        return code

    def decode(self, code):
        out = []
        for _ in range(self.e):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    # -- text format ----------------------------------------------------------

    def format_elem(self, a):
        if self.e == 1:
            return str(a[0])
        return "[" + " ".join(str(c) for c in a) + "]"

    def parse_elem(self, s):
        s = s.strip()
        if self.e == 1:
            return ((int(s) % self.p),)
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"bad element literal: {s!r}")
        return self.element([int(t) for t in s[1:-1].split()])


@lru_cache(maxsize=None)
def make_field(p, e):
    """Deterministic F_{p^e}: lex-least monic irreducible modulus of degree e."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("degree must be >= 1")
    if p ** e > SCAN_CAP:
        raise ValueError(f"field of order {p}^{e} exceeds the desk-scale cap")
    if e == 1:
        return FieldCtx(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=e):
        cand = low + (1,)
        if _pf_is_irreducible(cand, p):
            return FieldCtx(p, e, cand)
    raise RuntimeError("no irreducible found")  # unreachable


def frobenius(ctx, a, base_q):
    """The conjugation a -> a^base_q; base_q must be a power of ctx.p."""
    b = base_q
    while b % ctx.p == 0:
        b //= ctx.p
    if b != 1:
        raise ValueError(f"{base_q} is not a power of {ctx.p}")
    return ctx.pow(a, base_q)


@dataclass(frozen=True)
class RootOfUnity:
    """An element of exact multiplicative order N in its field."""

    ctx: FieldCtx
    value: tuple
    order: int

    def __post_init__(self):
        ctx, v, n = self.ctx, self.value, self.order
        if (ctx.q - 1) % n != 0:
            raise ValueError(f"{n} does not divide {ctx.q} - 1")
        if ctx.pow(v, n) != ctx.one:
            raise ValueError("value^order != 1")
        for r, _ in factorize(n).factors:
            if ctx.pow(v, n // r) == ctx.one:
                raise ValueError(f"order divides {n}//{r}")

    def power(self, j):
        return self.ctx.pow(self.value, j % self.order)


def primitive_root_of_unity(ctx, N):
    """Lex-least element of exact multiplicative order N (full scan)."""
    if N < 1:
        raise ValueError("N must be positive")
    if (ctx.q - 1) % N != 0:
        raise ValueError(f"{N} does not divide q - 1 = {ctx.q - 1}")
    if N == 1:
        return RootOfUnity(ctx, ctx.one, 1)
    for a in ctx.elements():
        if a == ctx.zero:
            continue
        if ctx.mult_order(a) == N:
            return RootOfUnity(ctx, a, N)
    raise RuntimeError("no element of the requested order")  # unreachable


class SubfieldEmbedding:
    """The copy of a small field inside a big one over the same prime.

    Maps coordinates through the lex-least root of the small modulus in the
    big field; the inverse solves the corresponding linear system over F_p.
    """

    def __init__(self, small, big):
        if small.p != big.p or big.e % small.e != 0:
            raise ValueError("no subfield embedding")
        self.small = small
        self.big = big
        if small.e == 1:
            self.basis = [big.one]
            return
        root = None
        for a in big.elements():
            acc = big.zero
            for c in reversed(small.modulus):
                acc = big.add(big.mul(acc, a), big.element(c))
            if acc == big.zero:
                root = a
                break
        if root is None:
            raise RuntimeError("modulus has no root in the big field")
        self.basis = [big.one]
        for _ in range(small.e - 1):
            self.basis.append(big.mul(self.basis[-1], root))

    def to_big(self, a):
        acc = self.big.zero
        for c, b in zip(a, self.basis):
            acc = self.big.add(acc, self.big.scalar_mul(c, b))
        return acc

    def to_small(self, a):
        """Coordinates of a over the small field; fails if a is not in it."""
        p = self.big.p
        rows = self.big.e
        cols = self.small.e
        mat = [[self.basis[j][i] for j in range(cols)] + [a[i]] for i in range(rows)]
        piv = []
        r = 0
        for c in range(cols):
            sel = next((i for i in range(r, rows) if mat[i][c]), None)
            if sel is None:
                continue
            mat[r], mat[sel] = mat[sel], mat[r]
            inv = pow(mat[r][c], p - 2, p)
            mat[r] = [v * inv % p for v in mat[r]]
            for i in range(rows):
                if i != r and mat[i][c]:
                    f = mat[i][c]
                    mat[i] = [(v - f * w) % p for v, w in zip(mat[i], mat[r])]
            piv.append(c)
            r += 1
        sol = [0] * cols
        for i, c in enumerate(piv):
            sol[c] = mat[i][cols]
        for i in range(r, rows):
            if mat[i][cols]:
                raise ValueError("element does not lie in the subfield")
        if self.to_big(tuple(sol)) != a:
            raise ValueError("element does not lie in the subfield")
        return tuple(sol)
