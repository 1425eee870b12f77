"""Tagged factorization of x^n +- 1 over F_q and F_{q^2}.

Factors are built from cyclotomic cosets and a primitive root of unity;
each record is tagged self-paired when the underlying coset is fixed by
the relevant reciprocity involution, and paired with its partner record
otherwise.  Both the coset-level and polynomial-level criteria are
evaluated on every factor and must agree, and the product of all records
is recomputed exactly before a report is returned.
"""

import json
from dataclasses import dataclass
from functools import lru_cache

from . import _engine
from .cosets import coset, is_scrim_coset, is_srim_coset
from .finitefield import SubfieldEmbedding, frobenius, make_field
from .numtheory import PrimePower, exact_divide
from .polyring import Poly, is_irreducible, xn_minus

__all__ = [
    "FactorRecord",
    "FactorizationReport",
    "decompose_length",
    "minimal_poly_from_coset",
    "factor_xn",
    "verify_report",
    "report_to_json",
    "report_from_json",
]

MODES = ("euclidean", "hermitian")


def decompose_length(n, p):
    """Write n = p^mu * 2^m * n' with n' odd and coprime to p."""
    if n < 1:
        raise ValueError("n must be positive")
    mu = exact_divide(p, n)
    rest = n // p ** mu
    m = exact_divide(2, rest)
    return mu, m, rest >> m


@dataclass(frozen=True)
class FactorRecord:
    """One irreducible factor with its multiplicity, coset and tag.

    partner is None for self-paired records, otherwise the index of the
    reciprocal (or conjugate-reciprocal) partner record in the report.
    """

    poly: Poly
    multiplicity: int
    coset_rep: int
    partner: int | None

    @property
    def is_self(self):
        return self.partner is None


@dataclass(frozen=True)
class FactorizationReport:
    q: PrimePower  # the field the factors live over
    n: int
    sign: int  # +1 for x^n - 1, -1 for x^n + 1
    mode: str
    mu: int
    m: int
    n_prime: int
    records: tuple
    r: int
    s: int
    t: int

    def base_q(self):
        """Conjugation base: q itself in Euclidean mode, sqrt(q) in Hermitian."""
        if self.mode == "hermitian":
            return self.q.p ** (self.q.e // 2)
        return self.q.q

    def self_count(self):
        return self.s


@lru_cache(maxsize=None)
def _poly_table(ctx, N):
    """Factors of x^N - 1 over ctx as Poly objects, keyed by coset rep."""
    table = _engine.factor_table(ctx, N)
    out = {}
    for rep, arr in table.items():
        coeffs = [tuple(int(v) for v in arr[:, j]) for j in range(arr.shape[1])]
        out[rep] = Poly(ctx, coeffs)
    return out


def minimal_poly_from_coset(cs, alpha, base_ctx):
    """Expand prod_{j in coset} (x - alpha^j) and re-express it over base_ctx.

    The product is computed in alpha's field; every coefficient must be
    fixed by the Frobenius a -> a^q of the base field, else the coset and
    root multiplier are inconsistent and this fails hard.
    """
    big = alpha.ctx
    if alpha.order != cs.n:
        raise ValueError("root order must equal the coset modulus")
    prod = Poly.one(big)
    for j in cs.elements:
        lin = Poly(big, [big.neg(alpha.power(j)), big.one])
        prod = prod * lin
    for c in prod.coeffs:
        if frobenius(big, c, base_ctx.q) != c:
            raise ValueError("coefficient not fixed by the base-field Frobenius; "
                             "coset multiplier does not match the base field")
    emb = _embedding(base_ctx, big)
    out = Poly(base_ctx, [emb.to_small(c) for c in prod.coeffs])
    if not out.is_monic() or out.degree != len(cs):
        raise AssertionError("minimal polynomial has the wrong shape")
    return out


@lru_cache(maxsize=None)
def _embedding(small, big):
    return SubfieldEmbedding(small, big)


def factor_xn(ctx, n, sign, mode="euclidean"):
    """Fully tagged factorization of x^n - sign over ctx.

    In Hermitian mode ctx must be a field of square order F_{q^2}; cosets
    are then taken with multiplier q^2 and tags use the conjugate-
    reciprocal involution with conjugation base q.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if ctx.p == 2:
        raise ValueError("odd characteristic required")
    if mode == "hermitian" and ctx.e % 2 != 0:
        raise ValueError("Hermitian mode needs a field of square order")
    mu, m, n_prime = decompose_length(n, ctx.p)
    k0 = n // ctx.p ** mu
    N = 2 * k0 if sign == -1 else k0
    base_q = ctx.p ** (ctx.e // 2) if mode == "hermitian" else ctx.q
    table = _poly_table(ctx, N)
    mult = ctx.p ** mu

    entries = []
    for rep, poly in table.items():
        if sign == -1 and rep % 2 == 0:
            continue
        if mode == "euclidean":
            self_by_coset = is_srim_coset(ctx.q, N, rep)
            self_by_poly = poly.is_self_reciprocal()
            partner_rep = coset(ctx.q, N, (-rep) % N).rep
        else:
            self_by_coset = is_scrim_coset(base_q, N, rep)
            self_by_poly = poly.is_self_conj_reciprocal(base_q)
            partner_rep = coset(ctx.q, N, (-base_q * rep) % N).rep
        if self_by_coset != self_by_poly:
            raise AssertionError(
                f"coset and polynomial tags disagree at rep {rep} (N={N})")
        entries.append((poly, rep, self_by_coset, partner_rep))

    entries.sort(key=lambda e: (e[0].degree, e[0].coeffs))
    index_of = {rep: i for i, (_, rep, _, _) in enumerate(entries)}
    records = []
    for poly, rep, is_self, partner_rep in entries:
        partner = None if is_self else index_of[partner_rep]
        records.append(FactorRecord(poly, mult, rep, partner))

    _check_pairing(records, base_q, mode)
    r = len(records)
    s = sum(1 for rec in records if rec.is_self)
    t = (r - s) // 2
    if r != s + 2 * t:
        raise AssertionError("r, s, t are inconsistent")
    _check_product(ctx, _engine.factor_table(ctx, N), records, n, sign, mult)
    return FactorizationReport(
        q=PrimePower(ctx.p, ctx.e, ctx.q), n=n, sign=sign, mode=mode,
        mu=mu, m=m, n_prime=n_prime, records=tuple(records), r=r, s=s, t=t)


def _check_pairing(records, base_q, mode):
    for i, rec in enumerate(records):
        mapped = (rec.poly.reciprocal_star() if mode == "euclidean"
                  else rec.poly.dagger(base_q))
        if rec.is_self:
            if mapped != rec.poly:
                raise AssertionError(f"self-tagged record {i} moves under the involution")
            continue
        j = rec.partner
        other = records[j]
        if other.partner != i or i == j:
            raise AssertionError(f"pairing is not a symmetric involution at {i}")
        if mapped != other.poly:
            raise AssertionError(f"record {i} is not paired with its reciprocal")


def _check_product(ctx, planes_table, records, n, sign, mult):
    """Exact product identity prod poly^mult == x^n - sign, on planes."""
    kern = _engine.kernel_for(ctx)
    prod = kern.one_poly()
    for rec in records:
        prod = kern.conv(prod, planes_table[rec.coset_rep])
    out = kern.one_poly()
    base = prod
    e = mult
    while e:
        if e & 1:
            out = kern.conv(out, base)
        e >>= 1
        if e:
            base = kern.conv(base, base)
    target = kern.from_int_coeffs([-sign] + [0] * (n - 1) + [1])
    if not kern.eq(out, target):
        raise AssertionError("product of tagged factors differs from x^n - sign")


def verify_report(report, deep=True):
    """Recheck a report from scratch; returns (ok, first violation).

    With deep=True every factor is re-tested for irreducibility, which is
    the expensive part; the structural checks always run.
    """
    ctx = make_field(report.q.p, report.q.e)
    base_q = report.base_q()
    star = (lambda f: f.reciprocal_star()) if report.mode == "euclidean" \
        else (lambda f: f.dagger(base_q))
    for i, rec in enumerate(report.records):
        if not rec.poly.is_monic():
            return False, f"record {i}: factor is not monic"
        if rec.poly.degree < 1 or rec.poly.coeff(0) == ctx.zero:
            return False, f"record {i}: factor cannot divide x^n - sign"
        if deep and not is_irreducible(rec.poly):
            return False, f"record {i}: factor is reducible"
        if rec.is_self:
            if star(rec.poly) != rec.poly:
                return False, f"record {i}: tagged self but moves under the involution"
        else:
            j = rec.partner
            if not (0 <= j < len(report.records)) or j == i:
                return False, f"record {i}: bad partner index"
            if report.records[j].partner != i:
                return False, f"record {i}: pairing is not symmetric"
            if star(rec.poly) != report.records[j].poly:
                return False, f"record {i}: partner is not the reciprocal"
    prod = Poly.one(ctx)
    for rec in report.records:
        term = rec.poly
        acc = Poly.one(ctx)
        e = rec.multiplicity
        while e:
            if e & 1:
                acc = acc * term
            term = term * term
            e >>= 1
        prod = prod * acc
    if prod != xn_minus(ctx, report.n, report.sign):
        return False, "product of records differs from x^n - sign"
    s = sum(1 for rec in report.records if rec.is_self)
    if report.r != len(report.records) or report.s != s or report.t != (report.r - s) // 2:
        return False, "r, s, t do not match the records"
    return True, ""


# -- JSON ---------------------------------------------------------------------


def report_to_json(report):
    obj = {
        "q": report.q.q, "p": report.q.p, "e": report.q.e, "n": report.n,
        "sign": "+1" if report.sign == 1 else "-1",
        "mode": report.mode, "mu": report.mu, "m": report.m,
        "n_prime": report.n_prime, "r": report.r, "s": report.s, "t": report.t,
        "factors": [
            {"poly": rec.poly.to_text(), "mult": rec.multiplicity,
             "coset_rep": rec.coset_rep,
             "tag": "self" if rec.is_self else {"paired": rec.partner}}
            for rec in report.records
        ],
    }
    return json.dumps(obj, separators=(",", ":"))


def report_from_json(text):
    obj = json.loads(text)
    ctx = make_field(obj["p"], obj["e"])
    records = tuple(
        FactorRecord(
            poly=Poly.from_text(ctx, fr["poly"]), multiplicity=fr["mult"],
            coset_rep=fr["coset_rep"],
            partner=None if fr["tag"] == "self" else fr["tag"]["paired"])
        for fr in obj["factors"])
    return FactorizationReport(
        q=PrimePower(obj["p"], obj["e"], obj["q"]), n=obj["n"],
        sign=1 if obj["sign"] == "+1" else -1, mode=obj["mode"],
        mu=obj["mu"], m=obj["m"], n_prime=obj["n_prime"],
        records=records, r=obj["r"], s=obj["s"], t=obj["t"])
