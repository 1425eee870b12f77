"""Counting formulas for SRIM/SCRIM factors of x^n +- 1.

Closed forms are divisor sums of phi/ord terms gated by the good or
oddly-good predicate; recursive forms rebuild the same numbers from the
counts at the odd part.  Two of the published recursive displays do not
match brute force (see the *_as_printed variants, kept verbatim for
transparency); the corrected forms used everywhere else are validated
against the closed forms and against explicit factorization in the test
suite.
"""

import enum
import json
from dataclasses import dataclass
from math import gcd

from .numtheory import (euler_phi, exact_divide, factorize, is_good,
                        is_oddly_good, is_prime, mult_ord)

__all__ = [
    "CountTerm",
    "CountBreakdown",
    "ExtremeClass",
    "count_srim_cyclic",
    "count_scrim_cyclic",
    "count_srim_negacyclic",
    "count_scrim_negacyclic",
    "count_srim_cyclic_recursive",
    "count_srim_cyclic_recursive_as_printed",
    "count_srim_negacyclic_recursive",
    "count_srim_negacyclic_recursive_as_printed",
    "count_scrim_cyclic_recursive",
    "count_scrim_negacyclic_recursive",
    "lem2_check",
    "classify_extreme_srim",
    "classify_extreme_scrim",
    "count_two_prime_srim",
    "count_two_prime_scrim",
    "nu_of",
]


def nu_of(q):
    """The exponent nu with 2^nu exactly dividing q + 1."""
    return exact_divide(2, q + 1)


@dataclass(frozen=True)
class CountTerm:
    d: int            # divisor indexing the term
    member: bool      # whether the gating predicate admits it
    phi: int          # phi of the full modulus for this term
    ord: int          # multiplicative order at the full modulus
    contribution: int  # phi // ord when member, else 0


@dataclass(frozen=True)
class CountBreakdown:
    q: int
    m: int
    n_prime: int
    nu: int
    terms: tuple
    total: int

    def to_json(self):
        obj = {
            "q": self.q, "m": self.m, "n_prime": self.n_prime, "nu": self.nu,
            "terms": [{"d": t.d, "member": t.member, "phi": t.phi,
                       "ord": t.ord, "contribution": t.contribution}
                      for t in self.terms],
            "total": self.total,
        }
        return json.dumps(obj, separators=(",", ":"))


def _split_even(n):
    m = exact_divide(2, n)
    return m, n >> m


def _check_coprime(q, n):
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")


def _term(d, modulus, member, ord_base):
    phi = euler_phi(modulus)
    o = mult_ord(ord_base, modulus)
    if member:
        if phi % o != 0:
            raise AssertionError(f"phi({modulus}) not divisible by the order")
        return CountTerm(d, True, phi, o, phi // o)
    return CountTerm(d, False, phi, o, 0)


def _cyclic_breakdown(q, n, member_fn, ord_base):
    _check_coprime(q, n)
    terms = tuple(_term(d, d, member_fn(d), ord_base)
                  for d in factorize(n).divisors())
    m, n_prime = _split_even(n)
    return CountBreakdown(q, m, n_prime, nu_of(q), terms,
                          sum(t.contribution for t in terms))


def _negacyclic_breakdown(q, m, n_prime, member_fn, ord_base):
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if n_prime % 2 == 0 or n_prime < 1:
        raise ValueError("n_prime must be odd and positive")
    _check_coprime(q, n_prime)
    half = 1 << (m + 1)
    terms = tuple(_term(d, half * d, member_fn(half * d), ord_base)
                  for d in factorize(n_prime).divisors())
    return CountBreakdown(q, m, n_prime, nu_of(q), terms,
                          sum(t.contribution for t in terms))


def count_srim_cyclic(q, n):
    """Number of self-reciprocal irreducible factors of x^n - 1 over F_q."""
    return _cyclic_breakdown(q, n, lambda d: is_good(d, q), q)


def count_scrim_cyclic(q, n):
    """Number of self-conjugate-reciprocal factors of x^n - 1 over F_{q^2}."""
    return _cyclic_breakdown(q, n, lambda d: is_oddly_good(d, q), q * q)


def count_srim_negacyclic(q, m, n_prime):
    """Number of SRIM factors of x^(2^m n') + 1 over F_q."""
    return _negacyclic_breakdown(q, m, n_prime, lambda D: is_good(D, q), q)


def count_scrim_negacyclic(q, m, n_prime):
    """Number of SCRIM factors of x^(2^m n') + 1 over F_{q^2}."""
    return _negacyclic_breakdown(q, m, n_prime,
                                 lambda D: is_oddly_good(D, q), q * q)


# -- recursive forms -----------------------------------------------------------


def _srim_bases(q, n_prime):
    a = count_srim_cyclic(q, n_prime).total
    b = count_srim_cyclic(q * q, n_prime).total
    return a, b


def count_srim_cyclic_recursive(q, m, n_prime):
    """|SRIM factors of x^(2^m n') - 1| from the counts at the odd part.

    Corrected exponent min(m, nu) - 1; the published display uses
    min(m, nu) and overcounts (see count_srim_cyclic_recursive_as_printed).
    """
    a, b = _srim_bases(q, n_prime)
    nu = nu_of(q)
    if m == 0:
        return a
    if m == 1 or nu == 1:
        return 2 * a
    return 2 * a + (2 ** (min(m, nu) - 1) - 1) * (2 * a - b)


def count_srim_cyclic_recursive_as_printed(q, m, n_prime):
    """The published display, kept verbatim for errata transparency."""
    a, b = _srim_bases(q, n_prime)
    nu = nu_of(q)
    if m == 0:
        return a
    if m == 1 or nu == 1:
        return 2 * a
    return 2 * a + (2 ** min(m, nu) - 1) * (2 * a - b)


def count_srim_negacyclic_recursive(q, m, n_prime):
    """|SRIM factors of x^(2^m n') + 1| from the counts at the odd part.

    Derived from the corrected cyclic recursion through the difference
    identity; coefficient 2^(m-1) for 1 <= m < nu, zero at and beyond nu.
    """
    a, b = _srim_bases(q, n_prime)
    nu = nu_of(q)
    if m == 0:
        return a
    if m >= nu:
        return 0
    return 2 ** (m - 1) * (2 * a - b)


def count_srim_negacyclic_recursive_as_printed(q, m, n_prime):
    """The published display: coefficient 3 in the m = 1 case."""
    a, b = _srim_bases(q, n_prime)
    nu = nu_of(q)
    if m == 0:
        return a
    if m >= nu:
        return 0
    if m == 1:
        return 3 * (2 * a - b)
    return 2 ** m * (2 * a - b)


def count_scrim_cyclic_recursive(q, m, n_prime):
    """|SCRIM factors of x^(2^m n') - 1|: doubles with m, saturating at nu."""
    c = count_scrim_cyclic(q, n_prime).total
    return 2 ** min(m, nu_of(q)) * c


def count_scrim_negacyclic_recursive(q, m, n_prime):
    """|SCRIM factors of x^(2^m n') + 1|: 2^m times the base below nu, else 0."""
    if m >= nu_of(q):
        return 0
    return 2 ** m * count_scrim_cyclic(q, n_prime).total


def lem2_check(q, n, mode):
    """Difference identity: count at x^n + 1 == count(x^2n - 1) - count(x^n - 1)."""
    m, n_prime = _split_even(n)
    if mode == "srim":
        nega = count_srim_negacyclic(q, m, n_prime).total
        return nega == count_srim_cyclic(q, 2 * n).total - count_srim_cyclic(q, n).total
    if mode == "scrim":
        nega = count_scrim_negacyclic(q, m, n_prime).total
        return nega == count_scrim_cyclic(q, 2 * n).total - count_scrim_cyclic(q, n).total
    raise ValueError("mode must be 'srim' or 'scrim'")


# -- extreme-case classification ----------------------------------------------


class ExtremeClass(enum.Enum):
    ALL_SELF = "all_self"
    ONLY_X_PLUS_ONE = "only_x_plus_one"
    MIXED = "mixed"


def _order_two_parts(q, n):
    if n % 2 == 0:
        raise ValueError("n must be odd")
    _check_coprime(q, n)
    return [exact_divide(2, mult_ord(q, l)) for l in factorize(n).primes()]


def classify_extreme_srim(q, n):
    """Whether every factor of x^n + 1 is SRIM, only x+1 is, or neither."""
    parts = _order_two_parts(q, n)
    if not parts or (min(parts) == max(parts) and parts[0] >= 1):
        return ExtremeClass.ALL_SELF
    if max(parts) == 0:
        return ExtremeClass.ONLY_X_PLUS_ONE
    return ExtremeClass.MIXED


def classify_extreme_scrim(q, n):
    """SCRIM analogue over F_{q^2}: the self case needs 2 || ord_l(q)."""
    parts = _order_two_parts(q, n)
    if not parts or all(s == 1 for s in parts):
        return ExtremeClass.ALL_SELF
    if all(s != 1 for s in parts):
        return ExtremeClass.ONLY_X_PLUS_ONE
    return ExtremeClass.MIXED


# -- two-prime corollaries ------------------------------------------------------


def _check_two_prime(q, l1, r1, l2, r2):
    if l1 == l2:
        raise ValueError("the primes must be distinct")
    for l in (l1, l2):
        if l == 2 or not is_prime(l):
            raise ValueError(f"{l} is not an odd prime")
        if gcd(l, q) != 1:
            raise ValueError(f"{l} divides q")
    if r1 < 1 or r2 < 1:
        raise ValueError("exponents must be >= 1")


def count_two_prime_srim(q, l1, r1, l2, r2):
    """|SRIM factors of x^(l1^r1 l2^r2) + 1| by the four-way case split."""
    _check_two_prime(q, l1, r1, l2, r2)
    s1 = exact_divide(2, mult_ord(q, l1))
    s2 = exact_divide(2, mult_ord(q, l2))
    if s2 > 0 and s1 == 0:
        l1, r1, s1, l2, r2, s2 = l2, r2, s2, l1, r1, s1
    if s1 == 0 and s2 == 0:
        return 1
    if s1 >= 1 and s2 == 0:
        return count_srim_negacyclic(q, 0, l1 ** r1).total
    if s1 != s2:
        return (count_srim_negacyclic(q, 0, l1 ** r1).total
                + count_srim_negacyclic(q, 0, l2 ** r2).total - 1)
    return sum(euler_phi(l1 ** i * l2 ** j) // mult_ord(q, l1 ** i * l2 ** j)
               for i in range(r1 + 1) for j in range(r2 + 1))


def count_two_prime_scrim(q, l1, r1, l2, r2):
    """|SCRIM factors of x^(l1^r1 l2^r2) + 1|; the self condition is s = 1."""
    _check_two_prime(q, l1, r1, l2, r2)
    s1 = exact_divide(2, mult_ord(q, l1))
    s2 = exact_divide(2, mult_ord(q, l2))
    if s2 == 1 and s1 != 1:
        l1, r1, s1, l2, r2, s2 = l2, r2, s2, l1, r1, s1
    if s1 != 1 and s2 != 1:
        return 1
    if s1 == 1 and s2 != 1:
        return count_scrim_negacyclic(q, 0, l1 ** r1).total
    q2 = q * q
    return sum(euler_phi(l1 ** i * l2 ** j) // mult_ord(q2, l1 ** i * l2 ** j)
               for i in range(r1 + 1) for j in range(r2 + 1))
