"""Integer arithmetic substrate: factorization, orders, and good integers.

A positive integer d is *good* with respect to an odd prime power q if d
divides q^k + 1 for some k >= 1, and *oddly good* if some such k is odd.
Both predicates are decided here without searching, by a case split on the
2-part of d driven by the 2-adic valuation of multiplicative orders; the
searching definitions are kept alongside as independent oracles.
"""

from dataclasses import dataclass
from math import gcd

__all__ = [
    "PrimePower",
    "FactoredInt",
    "is_prime",
    "factorize",
    "euler_phi",
    "mult_ord",
    "additive_ord",
    "exact_divide",
    "is_good",
    "is_oddly_good",
    "is_good_oracle",
    "is_oddly_good_oracle",
]


def is_prime(n):
    """Trial-division primality test, adequate at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """A field order q = p^e with its prime decomposition."""

    p: int
    e: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError("exponent must be >= 1")
        if self.p ** self.e != self.q:
            raise ValueError(f"{self.p}^{self.e} != {self.q}")

    @classmethod
    def from_order(cls, q):
        """Recover (p, e) from a prime power q."""
        fi = factorize(q)
        if len(fi.factors) != 1:
            raise ValueError(f"{q} is not a prime power")
        p, e = fi.factors[0]
        return cls(p, e, q)


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer with its canonical prime factorization."""

    value: int
    factors: tuple  # ((prime, exponent), ...) with primes ascending

    def divisors(self):
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def primes(self):
        return tuple(p for p, _ in self.factors)


def factorize(n):
    """Canonical prime factorization by trial division; factorize(1) is empty."""
    if n < 1:
        raise ValueError("n must be positive")
    m = n
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return FactoredInt(n, tuple(out))


def euler_phi(n):
    """Euler's totient function."""
    if n < 1:
        raise ValueError("n must be positive")
    r = n
    for p, _ in factorize(n).factors:
        r -= r // p
    return r


def mult_ord(a, n):
    """Least k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1
    t = euler_phi(n)
    for p, _ in factorize(t).factors:
        while t % p == 0 and pow(a, t // p, n) == 1:
            t //= p
    return t


def additive_ord(i, n):
    """Order of i in the additive group Z/n, i.e. n / gcd(i, n)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if i < 0:
        raise ValueError("i must be non-negative")
    return n // gcd(i, n)


def exact_divide(p, j):
    """The unique i with p^i | j and p^(i+1) not | j."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if j < 1:
        raise ValueError("j must be positive")
    i = 0
    while j % p == 0:
        j //= p
        i += 1
    return i


def _check_good_args(d, q):
    if d < 1:
        raise ValueError("d must be positive")
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if gcd(d, q) != 1:
        raise ValueError(f"gcd({d}, {q}) != 1")


def _common_two_part_of_orders(d_odd, q):
    """2-adic valuation s shared by ord_l(q) over all primes l | d_odd.

    Returns s >= 0 if a common valuation exists, None otherwise.
    """
    s = None
    for l in factorize(d_odd).primes():
        v = exact_divide(2, mult_ord(q, l))
        if s is None:
            s = v
        elif s != v:
            return None
    return s


def is_good(d, q):
    """Whether d divides q^k + 1 for some k >= 1, decided without search.

    Case split on d = 2^beta * d' with d' odd:
    d = 1 always; d' > 1, beta = 0: one common s >= 1 with 2^s || ord_l(q)
    for every prime l | d'; beta = 1: same as d'; beta >= 2, d' = 1:
    2^beta | q + 1; beta >= 2, d' > 1: 2^beta | q + 1 and 2 || ord_l(q)
    for every prime l | d'.
    """
    _check_good_args(d, q)
    if d == 1:
        return True
    beta = exact_divide(2, d)
    d_odd = d >> beta
    if beta == 0:
        s = _common_two_part_of_orders(d_odd, q)
        return s is not None and s >= 1
    if beta == 1:
        return True if d_odd == 1 else is_good(d_odd, q)
    if (q + 1) % (1 << beta) != 0:
        return False
    if d_odd == 1:
        return True
    return _common_two_part_of_orders(d_odd, q) == 1


def is_oddly_good(d, q):
    """Whether d divides q^r + 1 for some odd r >= 1, decided without search.

    Same case split as is_good, but the odd part must have 2 || ord_l(q)
    for every prime l dividing it.
    """
    _check_good_args(d, q)
    if d == 1:
        return True
    beta = exact_divide(2, d)
    d_odd = d >> beta
    if beta == 0:
        return _common_two_part_of_orders(d_odd, q) == 1
    if beta == 1:
        return True if d_odd == 1 else is_oddly_good(d_odd, q)
    if (q + 1) % (1 << beta) != 0:
        return False
    if d_odd == 1:
        return True
    return _common_two_part_of_orders(d_odd, q) == 1


def _good_oracle(d, q):
    """Search q^k mod d over one doubled order period.

    Residues of q^k repeat with period mult_ord(q, d); doubling the bound
    guarantees both parities of k are seen in every residue class.
    """
    _check_good_args(d, q)
    if d == 1:
        return True, True
    bound = 2 * mult_ord(q, d)
    good = oddly = False
    x = 1
    for k in range(1, bound + 1):
        x = x * q % d
        if x == d - 1:
            good = True
            if k % 2 == 1:
                oddly = True
    return good, oddly


def is_good_oracle(d, q):
    """Brute-force counterpart of is_good (the defining search)."""
    return _good_oracle(d, q)[0]


def is_oddly_good_oracle(d, q):
    """Brute-force counterpart of is_oddly_good."""
    return _good_oracle(d, q)[1]
