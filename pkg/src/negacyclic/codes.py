"""Negacyclic codes, their Euclidean/Hermitian duals, and LCD structure.

A length-n negacyclic code over F_q is the ideal of F_q[x]/(x^n + 1)
generated by a monic divisor g of x^n + 1; its dual is again negacyclic
with generator h* (Euclidean) or h+ (Hermitian) for h = (x^n + 1)/g.  The
complementary-dual test is gcd(g, dual generator input) = 1; a dense
null-space dual over the inner product is kept as an independent oracle.
"""

import json
from dataclasses import dataclass

from .factorization import decompose_length, factor_xn
from .counting import count_scrim_negacyclic, count_srim_negacyclic
from .finitefield import frobenius, make_field
from .numtheory import PrimePower, euler_phi, factorize, mult_ord
from .polyring import Poly, xn_minus

__all__ = [
    "NegacyclicCode",
    "LcdCensus",
    "make_code",
    "dual_generator",
    "is_lcd",
    "enumerate_lcd",
    "count_lcd",
    "brute_dual",
    "intersection_dim",
    "intersection_dim_dense",
]

ENUM_CAP = 1 << 20
DENSE_CAP = 64


class NegacyclicCode:
    """A negacyclic code identified by its monic generator dividing x^n + 1."""

    __slots__ = ("ctx", "n", "gen", "dim")

    def __init__(self, ctx, n, gen):
        if n < 1:
            raise ValueError("length must be positive")
        if gen.ctx != ctx:
            raise ValueError("generator lives in the wrong field")
        if not gen.is_monic():
            raise ValueError("generator must be monic")
        modulus = xn_minus(ctx, n, -1)
        if (modulus % gen).degree >= 0:
            raise ValueError("generator does not divide x^n + 1")
        self.ctx = ctx
        self.n = n
        self.gen = gen
        self.dim = n - gen.degree

    def __eq__(self, other):
        return (isinstance(other, NegacyclicCode)
                and (self.ctx, self.n, self.gen) == (other.ctx, other.n, other.gen))

    def __repr__(self):
        return f"NegacyclicCode(n={self.n}, dim={self.dim}, gen={self.gen.to_text()!r})"

    def generator_matrix(self):
        """Rows x^i g(x) mod (x^n + 1) for i = 0..dim-1, as coefficient lists."""
        modulus = xn_minus(self.ctx, self.n, -1)
        rows = []
        cur = self.gen % modulus
        for _ in range(self.dim):
            rows.append([cur.coeff(j) for j in range(self.n)])
            cur = cur.shift(1) % modulus
        return rows


def make_code(ctx, n, gen):
    return NegacyclicCode(ctx, n, gen)


def _base_q(ctx, mode):
    if mode == "euclidean":
        return ctx.q
    if mode == "hermitian":
        if ctx.e % 2 != 0:
            raise ValueError("Hermitian mode needs a field of square order")
        return ctx.p ** (ctx.e // 2)
    raise ValueError("mode must be 'euclidean' or 'hermitian'")


def dual_generator(code, mode):
    """Generator of the dual code: h* or h+ with h = (x^n + 1)/g."""
    base_q = _base_q(code.ctx, mode)
    h = xn_minus(code.ctx, code.n, -1) // code.gen
    out = h.reciprocal_star() if mode == "euclidean" else h.dagger(base_q)
    if not out.is_monic():
        raise AssertionError("dual generator is not monic")
    return out


def is_lcd(code, mode):
    """Complementary-dual test: gcd(g, h^involution) = 1."""
    return code.gen.gcd(dual_generator(code, mode)).degree == 0


@dataclass(frozen=True)
class LcdCensus:
    q: int     # base field order (codes live over F_{q^2} in Hermitian mode)
    n: int
    mode: str
    mu: int
    m: int
    n_prime: int
    r: int
    s: int
    t: int
    count: int
    generators: tuple | None  # Poly tuple when materialized

    def to_json(self):
        obj = {"q": self.q, "n": self.n, "mode": self.mode, "mu": self.mu,
               "m": self.m, "n_prime": self.n_prime, "r": self.r, "s": self.s,
               "t": self.t, "count": self.count}
        if self.generators is not None:
            obj["generators"] = [g.to_text() for g in self.generators]
        return json.dumps(obj, separators=(",", ":"))


def enumerate_lcd(ctx, n, mode):
    """All LCD generator polynomials, from the tagged factorization.

    Each self-paired factor toggles independently at full multiplicity
    p^mu, each reciprocal pair toggles jointly; subsets are emitted in
    bitmask order (self factors first, then pairs, both in record order).
    """
    report = factor_xn(ctx, n, -1, mode)
    selfs = [rec for rec in report.records if rec.is_self]
    pairs = [(rec, report.records[rec.partner])
             for i, rec in enumerate(report.records)
             if not rec.is_self and i < rec.partner]
    items = len(selfs) + len(pairs)
    if 1 << items > ENUM_CAP:
        raise ValueError("too many complementary-dual codes to materialize")
    mult = ctx.p ** report.mu

    def powered(poly):
        acc, term, e = Poly.one(ctx), poly, mult
        while e:
            if e & 1:
                acc = acc * term
            term = term * term
            e >>= 1
        return acc

    blocks = [powered(rec.poly) for rec in selfs]
    blocks += [powered(a.poly * b.poly) for a, b in pairs]
    gens = []
    for mask in range(1 << items):
        g = Poly.one(ctx)
        for i, blk in enumerate(blocks):
            if mask >> i & 1:
                g = g * blk
        gens.append(g)
    r, s = report.r, report.s
    census = LcdCensus(q=_base_q(ctx, mode), n=n, mode=mode, mu=report.mu,
                       m=report.m, n_prime=report.n_prime, r=r, s=s,
                       t=report.t, count=2 ** ((r + s) // 2),
                       generators=tuple(gens))
    if len(gens) != census.count:
        raise AssertionError("enumerated census disagrees with 2^((r+s)/2)")
    return census


def count_lcd(q, n, mode):
    """Census by formula only: r from the divisor sum, s from the counts."""
    pp = PrimePower.from_order(q)
    mu, m, n_prime = decompose_length(n, pp.p)
    ord_base = q if mode == "euclidean" else q * q
    r = 0
    for d in factorize(n_prime).divisors():
        D = (1 << (m + 1)) * d
        r += euler_phi(D) // mult_ord(ord_base, D)
    if mode == "euclidean":
        s = count_srim_negacyclic(q, m, n_prime).total
    else:
        s = count_scrim_negacyclic(q, m, n_prime).total
    if (r + s) % 2 != 0:
        raise AssertionError("r + s must be even")
    return LcdCensus(q=q, n=n, mode=mode, mu=mu, m=m, n_prime=n_prime,
                     r=r, s=s, t=(r - s) // 2, count=2 ** ((r + s) // 2),
                     generators=None)


# -- dense linear-algebra oracle --------------------------------------------------


def _row_reduce(ctx, rows):
    """In-place RREF over ctx; returns (rank, pivot columns)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        sel = next((i for i in range(rank, len(rows)) if rows[i][col] != ctx.zero), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != ctx.zero:
                f = rows[i][col]
                rows[i] = [ctx.sub(v, ctx.mul(f, w)) for v, w in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots


def _null_space(ctx, rows, ncols):
    """Basis of {v : rows . v = 0} over ctx."""
    work = [list(r) for r in rows]
    rank, pivots = _row_reduce(ctx, work)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ctx.zero] * ncols
        v[fc] = ctx.one
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(work[i][fc])
        basis.append(v)
    return basis


def brute_dual(code, mode):
    """Null-space dual under the chosen inner product; matches dual_generator.

    The Hermitian form sum u_i v_i^q is linear in u, so v is in the dual
    iff v^(q) (coordinate-wise conjugate) lies in the Euclidean null space;
    conjugation is an involution, so the dual is the conjugated null space.
    """
    if code.n > DENSE_CAP:
        raise ValueError(f"dense dual capped at length {DENSE_CAP}")
    ctx = code.ctx
    base_q = _base_q(ctx, mode)
    rows = code.generator_matrix()
    null = _null_space(ctx, rows, code.n)
    if mode == "hermitian":
        null = [[frobenius(ctx, v, base_q) for v in vec] for vec in null]
    gen = xn_minus(ctx, code.n, -1)
    for vec in null:
        gen = gen.gcd(Poly(ctx, vec))
    dual = NegacyclicCode(ctx, code.n, gen.monic())
    if dual.dim != code.n - code.dim:
        raise AssertionError("dual dimension mismatch")
    if dual.dim != len(null):
        raise AssertionError("null space is not the negacyclic span")
    return dual


def intersection_dim(c1, c2):
    """Dimension of the intersection: the ideal generated by lcm(g1, g2)."""
    if c1.ctx != c2.ctx or c1.n != c2.n:
        raise ValueError("codes live in different spaces")
    g = c1.gen.gcd(c2.gen)
    lcm = (c1.gen * c2.gen) // g
    return c1.n - lcm.degree


def intersection_dim_dense(c1, c2):
    """Same, via ranks: dim(A) + dim(B) - rank of the stacked matrix."""
    if c1.n > DENSE_CAP:
        raise ValueError(f"dense intersection capped at length {DENSE_CAP}")
    rows = c1.generator_matrix() + c2.generator_matrix()
    rank, _ = _row_reduce(c1.ctx, rows)
    return c1.dim + c2.dim - rank
