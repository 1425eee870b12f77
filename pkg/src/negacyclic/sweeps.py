"""Grid sweeps shared by the CLI self-test and the acceptance suite.

Each sweep function exhaustively checks one family of identities over its
parameter grid and returns a SweepResult; a sweep passes when it has no
failures.  The factorization-backed sweeps can fan out over worker
processes (one chunk per field and mode, so each worker reuses its own
factor tables); everything else is cheap integer arithmetic.
"""

import os
import random
from dataclasses import dataclass
from math import gcd
from multiprocessing import Pool

from . import counting
from .codes import (NegacyclicCode, brute_dual, count_lcd, dual_generator,
                    enumerate_lcd, intersection_dim, intersection_dim_dense,
                    is_lcd, make_code)
from .cosets import (divides_xn_plus1, is_scrim_coset, is_srim_coset,
                     representatives, same_parity)
from .counting import ExtremeClass
from .factorization import factor_xn
from .finitefield import make_field
from .numtheory import (PrimePower, exact_divide, factorize, is_good,
                        is_good_oracle, is_oddly_good, is_oddly_good_oracle,
                        mult_ord)
from .polyring import Poly

Q_GRID = (3, 5, 7, 9, 11, 13, 25, 27)
CODES_Q_GRID = (3, 5, 9)
DIVISOR_BUDGET = 512  # exhaustive below this, seeded sample above

__all__ = [
    "SweepResult", "Q_GRID", "CODES_Q_GRID", "default_threads",
    "sweep_good_integers", "sweep_characterizations",
    "sweep_counts_vs_factorization", "sweep_difference_identities",
    "sweep_recursions", "sweep_extremes_and_products", "sweep_codes",
    "run_all",
]


@dataclass
class SweepResult:
    name: str
    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.name}: {self.checked} checks"
        if self.failures:
            msg += f", first failure: {self.failures[0]}"
        return msg


def default_threads():
    env = os.environ.get("NEGACYCL_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _pool_map(fn, chunks, threads):
    if threads > 1 and len(chunks) > 1:
        with Pool(min(threads, len(chunks))) as pool:
            return pool.map(fn, chunks)
    return [fn(c) for c in chunks]


def sweep_good_integers(q_grid=Q_GRID, d_max=500):
    """Predicates vs brute-force oracles, plus the transfer laws."""
    failures = []
    checked = 0
    for q in q_grid:
        for d in range(1, d_max + 1):
            if gcd(d, q) != 1:
                continue
            g, og = is_good(d, q), is_oddly_good(d, q)
            if g != is_good_oracle(d, q):
                failures.append(f"is_good({d}, {q}) = {g} disagrees with oracle")
            if og != is_oddly_good_oracle(d, q):
                failures.append(f"is_oddly_good({d}, {q}) = {og} disagrees with oracle")
            if og and not g:
                failures.append(f"oddly-good but not good at ({d}, {q})")
            if d % 2 == 1 and 2 * d <= d_max:
                if g != is_good(2 * d, q) or og != is_oddly_good(2 * d, q):
                    failures.append(f"odd<->2*odd transfer fails at ({d}, {q})")
            checked += 3
    return SweepResult("good-integer equivalences", checked, failures)


def sweep_characterizations(q_grid=Q_GRID, n_max=400):
    """Coset-equality classifiers vs arithmetic ones, parity, divisibility.

    is_srim_coset / is_scrim_coset raise internally when the two sides of
    their characterization disagree, so calling them over the grid is the
    executable form of the equivalence lemmas.
    """
    failures = []
    checked = 0
    for q in q_grid:
        for N in range(2, n_max + 1, 2):
            if gcd(N, q) != 1:
                continue
            m = exact_divide(2, N) - 1
            n_prime = N >> (m + 1)
            for cs in representatives(q, N):
                if not same_parity(cs):
                    failures.append(f"parity lemma fails at (q={q}, N={N}, i={cs.rep})")
                try:
                    is_srim_coset(q, N, cs.rep)
                    divides_xn_plus1(q, m, n_prime, cs.rep)
                except AssertionError as exc:
                    failures.append(str(exc))
                checked += 3
            for cs in representatives(q * q, N):
                try:
                    is_scrim_coset(q, N, cs.rep)
                except AssertionError as exc:
                    failures.append(str(exc))
                checked += 1
    return SweepResult("characterization lemmas", checked, failures)


def _counts_chunk(args):
    """Worker: closed-form counts vs tagged factor counts for one field/mode."""
    q, mode, n_max = args
    pp = PrimePower.from_order(q)
    ctx = make_field(pp.p, pp.e if mode == "euclidean" else 2 * pp.e)
    failures = []
    checked = 0
    for n in range(1, n_max + 1):
        if gcd(n, q) != 1:
            continue
        m = exact_divide(2, n)
        n_prime = n >> m
        if mode == "euclidean":
            cyc = counting.count_srim_cyclic(q, n).total
            neg = counting.count_srim_negacyclic(q, m, n_prime).total
        else:
            cyc = counting.count_scrim_cyclic(q, n).total
            neg = counting.count_scrim_negacyclic(q, m, n_prime).total
        try:
            s_cyc = factor_xn(ctx, n, +1, mode).s
            s_neg = factor_xn(ctx, n, -1, mode).s
        except AssertionError as exc:
            failures.append(f"(q={q}, n={n}, {mode}): {exc}")
            checked += 2
            continue
        if cyc != s_cyc:
            failures.append(
                f"cyclic count {cyc} != factorization {s_cyc} at (q={q}, n={n}, {mode})")
        if neg != s_neg:
            failures.append(
                f"negacyclic count {neg} != factorization {s_neg} at (q={q}, n={n}, {mode})")
        checked += 2
    return checked, failures


def sweep_counts_vs_factorization(q_grid=Q_GRID, n_max=200, threads=None):
    """All four closed-form counting theorems vs explicit tagged counts."""
    threads = threads or default_threads()
    chunks = [(q, mode, n_max) for q in q_grid
              for mode in ("hermitian", "euclidean")]
    results = _pool_map(_counts_chunk, chunks, threads)
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    return SweepResult("closed-form counts vs factorization", checked, failures)


def sweep_difference_identities(q_grid=Q_GRID, n_max=200):
    """Negacyclic count == cyclic count at 2n minus cyclic count at n."""
    failures = []
    checked = 0
    for q in q_grid:
        for n in range(1, n_max + 1):
            if gcd(n, q) != 1:
                continue
            for mode in ("srim", "scrim"):
                if not counting.lem2_check(q, n, mode):
                    failures.append(f"difference identity fails at (q={q}, n={n}, {mode})")
                checked += 1
    return SweepResult("difference identities", checked, failures)


def sweep_recursions(q_grid=Q_GRID, n_max=200):
    """Recursive formulas equal closed forms; errata pins hold."""
    failures = []
    checked = 0
    for q in q_grid:
        for n in range(1, n_max + 1):
            if gcd(n, q) != 1:
                continue
            m = exact_divide(2, n)
            n_prime = n >> m
            pairs = (
                (counting.count_srim_cyclic_recursive(q, m, n_prime),
                 counting.count_srim_cyclic(q, n).total, "srim cyclic"),
                (counting.count_srim_negacyclic_recursive(q, m, n_prime),
                 counting.count_srim_negacyclic(q, m, n_prime).total, "srim negacyclic"),
                (counting.count_scrim_cyclic_recursive(q, m, n_prime),
                 counting.count_scrim_cyclic(q, n).total, "scrim cyclic"),
                (counting.count_scrim_negacyclic_recursive(q, m, n_prime),
                 counting.count_scrim_negacyclic(q, m, n_prime).total, "scrim negacyclic"),
            )
            for got, want, label in pairs:
                if got != want:
                    failures.append(
                        f"{label} recursion {got} != closed form {want} at (q={q}, n={n})")
                checked += 1
    # pins for the true values at the two documented printed-formula gaps
    pins = (
        (counting.count_srim_cyclic_recursive(3, 2, 1), 3, "SRIM(3, x^4-1)"),
        (counting.count_srim_negacyclic_recursive(3, 1, 1), 1, "SRIM(3, x^2+1)"),
        (counting.count_srim_cyclic_recursive(7, 3, 1), 5, "SRIM(7, x^8-1)"),
        (counting.count_srim_cyclic_recursive_as_printed(3, 2, 1), 5, "as-printed cyclic"),
        (counting.count_srim_negacyclic_recursive_as_printed(3, 1, 1), 3,
         "as-printed negacyclic"),
        (counting.count_srim_cyclic_recursive_as_printed(7, 3, 1), 9,
         "as-printed cyclic at 7"),
    )
    for got, want, label in pins:
        if got != want:
            failures.append(f"regression pin {label}: got {got}, want {want}")
        checked += 1
    return SweepResult("recursive formulas", checked, failures)


def _extremes_chunk(args):
    q, n_max = args
    pp = PrimePower.from_order(q)
    ctx_e = make_field(pp.p, pp.e)
    ctx_h = make_field(pp.p, 2 * pp.e)
    failures = []
    checked = 0
    for n in range(1, n_max + 1, 2):
        if gcd(n, q) != 1:
            continue
        rep_e = factor_xn(ctx_e, n, -1, "euclidean")
        rep_h = factor_xn(ctx_h, n, -1, "hermitian")
        for label, verdict, rep in (
                ("srim", counting.classify_extreme_srim(q, n), rep_e),
                ("scrim", counting.classify_extreme_scrim(q, n), rep_h)):
            all_self = rep.s == rep.r
            only_one = rep.s == 1
            ok = ((verdict is ExtremeClass.ALL_SELF and all_self)
                  or (verdict is ExtremeClass.ONLY_X_PLUS_ONE
                      and only_one and not all_self)
                  or (verdict is ExtremeClass.MIXED and not all_self and not only_one))
            if not ok:
                failures.append(
                    f"{label} verdict {verdict.value} wrong at (q={q}, n={n}): "
                    f"r={rep.r}, s={rep.s}")
            checked += 1
        fac = factorize(n)
        if n > 1 and len(fac.factors) == 1:
            for label, verdict in (("srim", counting.classify_extreme_srim(q, n)),
                                   ("scrim", counting.classify_extreme_scrim(q, n))):
                if verdict is ExtremeClass.MIXED:
                    failures.append(f"{label} dichotomy broken at (q={q}, n={n})")
                checked += 1
        if len(fac.factors) == 2:
            (l1, r1), (l2, r2) = fac.factors
            got = counting.count_two_prime_srim(q, l1, r1, l2, r2)
            if got != rep_e.s:
                failures.append(
                    f"two-prime SRIM count {got} != factorization {rep_e.s} "
                    f"at (q={q}, n={n})")
            got = counting.count_two_prime_scrim(q, l1, r1, l2, r2)
            if got != rep_h.s:
                failures.append(
                    f"two-prime SCRIM count {got} != factorization {rep_h.s} "
                    f"at (q={q}, n={n})")
            checked += 2
        checked += _product_theorems(q, n, ctx_e, ctx_h, rep_e, rep_h, failures)
    return checked, failures


def _product_theorems(q, n, ctx_e, ctx_h, rep_e, rep_h, failures):
    """Set-level product statements over coprime odd splittings n = n1 * n2."""
    checked = 0
    classify = {"srim": counting.classify_extreme_srim,
                "scrim": counting.classify_extreme_scrim}
    for n1 in factorize(n).divisors():
        n2 = n // n1
        if n1 <= 1 or n2 <= 1 or gcd(n1, n2) != 1:
            continue
        for label, ctx, rep_n in (("srim", ctx_e, rep_e), ("scrim", ctx_h, rep_h)):
            mode = "euclidean" if label == "srim" else "hermitian"
            v1, v2 = classify[label](q, n1), classify[label](q, n2)
            if v1 is ExtremeClass.ONLY_X_PLUS_ONE and v2 is ExtremeClass.ONLY_X_PLUS_ONE:
                if classify[label](q, n) is not ExtremeClass.ONLY_X_PLUS_ONE:
                    failures.append(
                        f"{label} product (only-x+1) fails at (q={q}, {n1}*{n2})")
                checked += 1
            elif v1 is ExtremeClass.ALL_SELF and v2 is ExtremeClass.ONLY_X_PLUS_ONE:
                rep1 = factor_xn(ctx, n1, -1, mode)
                selfs_n = {r.poly for r in rep_n.records if r.is_self}
                selfs_1 = {r.poly for r in rep1.records if r.is_self}
                if selfs_n != selfs_1:
                    failures.append(
                        f"{label} product (absorbing) fails at (q={q}, {n1}*{n2})")
                checked += 1
            elif v1 is ExtremeClass.ALL_SELF and v2 is ExtremeClass.ALL_SELF:
                every = classify[label](q, n) is ExtremeClass.ALL_SELF
                if label == "srim":
                    s1 = exact_divide(2, mult_ord(q, n1))
                    s2 = exact_divide(2, mult_ord(q, n2))
                    expect = s1 == s2 and s1 >= 1
                else:
                    expect = True
                if every != expect:
                    failures.append(
                        f"{label} product (all-self) fails at (q={q}, {n1}*{n2})")
                checked += 1
    return checked


def sweep_extremes_and_products(q_grid=CODES_Q_GRID, n_max=199, threads=None):
    """Extreme-case classifiers, dichotomy, two-prime and product theorems."""
    threads = threads or default_threads()
    results = _pool_map(_extremes_chunk, [(q, n_max) for q in q_grid], threads)
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    return SweepResult("extreme cases and product theorems", checked, failures)


def _poly_power(poly, e):
    acc, term = Poly.one(poly.ctx), poly
    while e:
        if e & 1:
            acc = acc * term
        term = term * term
        e >>= 1
    return acc


def _divisor_sample(report, ctx, budget):
    """Exponent vectors for divisors of x^n + 1: exhaustive when the count
    fits the budget, else a seeded sample plus the structured corners."""
    mult = ctx.p ** report.mu
    r = len(report.records)
    total = (mult + 1) ** r
    vectors = []
    if total <= budget:
        stack = [()]
        for _ in range(r):
            stack = [v + (e,) for v in stack for e in range(mult + 1)]
        vectors = stack
    else:
        rng = random.Random(f"divisors:{ctx.q}:{report.n}:{report.mode}")
        seen = {(0,) * r, (mult,) * r}
        for i in range(r):  # single-factor divisors and their complements
            one_hot = tuple(mult if j == i else 0 for j in range(r))
            seen.add(one_hot)
            seen.add(tuple(mult - e for e in one_hot))
        while len(seen) < budget:
            seen.add(tuple(rng.randrange(mult + 1) for _ in range(r)))
        vectors = sorted(seen)
    polys = [_poly_power(rec.poly, 1) for rec in report.records]
    out = []
    for vec in vectors:
        g = Poly.one(ctx)
        for poly, e in zip(polys, vec):
            if e:
                g = g * _poly_power(poly, e)
        out.append(g)
    return out


def _codes_chunk(args):
    q, n_max, budget = args
    pp = PrimePower.from_order(q)
    failures = []
    checked = 0
    for mode in ("euclidean", "hermitian"):
        ctx = make_field(pp.p, pp.e if mode == "euclidean" else 2 * pp.e)
        base_q = pp.q
        for n in range(1, n_max + 1):
            report = factor_xn(ctx, n, -1, mode)
            mult = ctx.p ** report.mu
            census = enumerate_lcd(ctx, n, mode)
            formula = count_lcd(q, n, mode)
            lcd_gens = set(census.generators)
            if census.count != formula.count or len(lcd_gens) != census.count:
                failures.append(f"census size mismatch at (q={q}, n={n}, {mode})")
            checked += 1
            for g in _divisor_sample(report, ctx, budget):
                code = make_code(ctx, n, g)
                dual = brute_dual(code, mode)
                expect = dual_generator(code, mode)
                if dual.gen != expect:
                    failures.append(
                        f"null-space dual mismatch at (q={q}, n={n}, {mode}, "
                        f"g={g.to_text()})")
                if dual.dim != n - code.dim:
                    failures.append(f"dual dimension wrong at (q={q}, n={n}, {mode})")
                if dual_generator(dual, mode) != g:
                    failures.append(f"dual involution fails at (q={q}, n={n}, {mode})")
                lcd = is_lcd(code, mode)
                inter = intersection_dim(code, dual)
                if intersection_dim_dense(code, dual) != inter:
                    failures.append(
                        f"intersection routes differ at (q={q}, n={n}, {mode})")
                if lcd != (inter == 0) or lcd != (g in lcd_gens):
                    failures.append(
                        f"LCD three-way disagreement at (q={q}, n={n}, {mode}, "
                        f"g={g.to_text()})")
                checked += 5
            for g in census.generators:
                fixed = (g.reciprocal_star() == g if mode == "euclidean"
                         else g.dagger(base_q) == g)
                if not fixed:
                    failures.append(f"census generator moves at (q={q}, n={n}, {mode})")
                for rec in report.records:
                    e, h = 0, g
                    while h.degree >= rec.poly.degree and (h % rec.poly).degree < 0:
                        h = h // rec.poly
                        e += 1
                    if e not in (0, mult):
                        failures.append(
                            f"exponent law broken at (q={q}, n={n}, {mode}): {e}")
                checked += 1
    # census count is independent of the p-power in the length
    for mode in ("euclidean", "hermitian"):
        for n0 in (1, 2, 4):
            base = count_lcd(q, n0, mode).count
            for mu in (1, 2):
                if count_lcd(q, n0 * pp.p ** mu, mode).count != base:
                    failures.append(f"count depends on mu at (q={q}, n0={n0}, {mode})")
                checked += 1
    return checked, failures


def sweep_codes(q_grid=CODES_Q_GRID, n_max=24, threads=None, budget=DIVISOR_BUDGET):
    """Dual and LCD correctness over divisors of x^n + 1."""
    threads = threads or default_threads()
    results = _pool_map(_codes_chunk, [(q, n_max, budget) for q in q_grid], threads)
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    return SweepResult("dual and LCD correctness", checked, failures)


def run_all(q_max=27, n_max=200, threads=None):
    """Full self-test; bounds trim every grid uniformly."""
    q_grid = tuple(q for q in Q_GRID if q <= q_max)
    codes_grid = tuple(q for q in CODES_Q_GRID if q <= q_max)
    return [
        sweep_good_integers(q_grid, max(min(500, 3 * n_max), 50)),
        sweep_characterizations(q_grid, min(400, 2 * n_max)),
        sweep_counts_vs_factorization(q_grid, n_max, threads),
        sweep_difference_identities(q_grid, n_max),
        sweep_recursions(q_grid, n_max),
        sweep_extremes_and_products(codes_grid, min(199, n_max), threads),
        sweep_codes(codes_grid, min(24, n_max), threads),
    ]
