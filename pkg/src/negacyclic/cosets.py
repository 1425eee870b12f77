"""Cyclotomic cosets and the arithmetic classification of x^n +- 1 factors.

Everything here is pure integer arithmetic: the coset Cl_{q,n}(i) indexes
one monic irreducible factor of x^n - 1, and whether that factor is
self-reciprocal (resp. self-conjugate-reciprocal) is visible on the coset
alone.  Each classification is computed from the defining coset equality
and cross-checked against the good/oddly-good integer criterion, so the
equivalences behind them are re-proved on every call.
"""

from dataclasses import dataclass
from math import gcd

from .numtheory import additive_ord, euler_phi, is_good, is_oddly_good, mult_ord

__all__ = [
    "CyclotomicCoset",
    "coset",
    "representatives",
    "same_parity",
    "divides_xn_plus1",
    "is_srim_coset",
    "is_scrim_coset",
    "partition_by_additive_order",
]


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of i under multiplication by q modulo n."""

    q: int
    n: int
    rep: int
    elements: tuple  # sorted ascending

    def __len__(self):
        return len(self.elements)

    def __post_init__(self):
        n, q = self.n, self.q
        elems = set(self.elements)
        if self.rep != min(elems):
            raise ValueError("rep must be the minimal element")
        for a in elems:
            if a * q % n not in elems:
                raise ValueError("set not closed under multiplication by q")
        orders = {additive_ord(a, n) for a in elems}
        if len(orders) != 1:
            raise ValueError("members with distinct additive order")


def coset(q, n, i):
    """The cyclotomic coset Cl_{q,n}(i)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    i %= n
    orbit = [i]
    x = i * q % n
    while x != i:
        orbit.append(x)
        x = x * q % n
    elems = tuple(sorted(orbit))
    cs = CyclotomicCoset(q, n, elems[0], elems)
    if len(elems) != mult_ord(q, additive_ord(i, n)):
        raise AssertionError("coset size law violated")
    return cs


def representatives(q, n):
    """All cosets mod n, one per orbit, ordered by minimal representative."""
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) != 1")
    seen = bytearray(n)
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cs = coset(q, n, i)
        for a in cs.elements:
            seen[a] = 1
        out.append(cs)
    return out


def same_parity(cs):
    """Whether all members share one parity (a lemma for even moduli)."""
    return len({a & 1 for a in cs.elements}) == 1


def divides_xn_plus1(q, m, n_prime, i):
    """Whether the factor indexed by i mod 2^(m+1) n' divides x^(2^m n') + 1.

    Holds exactly when i is odd, equivalently when 2^(m+1) divides the
    additive order of i; both sides are computed and compared.
    """
    N = (1 << (m + 1)) * n_prime
    if gcd(q, N) != 1:
        raise ValueError(f"gcd({q}, {N}) != 1")
    i %= N
    by_parity = i % 2 == 1
    by_order = additive_ord(i, N) % (1 << (m + 1)) == 0
    if by_parity != by_order:
        raise AssertionError("parity and additive-order criteria disagree")
    return by_parity


def is_srim_coset(q, N, i):
    """Whether the factor for Cl_{q,N}(i) is self-reciprocal.

    Decided by the coset equality Cl(i) == Cl(-i); cross-checked against
    membership of the additive order of i in the good integers.
    """
    cs = coset(q, N, i)
    by_coset = cs.elements == coset(q, N, (-i) % N).elements
    by_good = is_good(additive_ord(i % N, N), q)
    if by_coset != by_good:
        raise AssertionError(f"SRIM criteria disagree at (q={q}, N={N}, i={i})")
    return by_coset


def is_scrim_coset(q, N, i):
    """Whether the factor for Cl_{q^2,N}(i) is self-conjugate-reciprocal.

    Decided by Cl_{q^2}(i) == Cl_{q^2}(-q i); cross-checked against the
    oddly-good criterion on the additive order of i.
    """
    q2 = q * q
    by_coset = coset(q2, N, i).elements == coset(q2, N, (-q * i) % N).elements
    by_oddly = is_oddly_good(additive_ord(i % N, N), q)
    if by_coset != by_oddly:
        raise AssertionError(f"SCRIM criteria disagree at (q={q}, N={N}, i={i})")
    return by_coset


def partition_by_additive_order(q_mult, N, odd_only):
    """Group cosets mod N by the common additive order of their members.

    With odd_only, restrict to cosets of odd representatives (the ones
    indexing factors of x^(N/2) + 1).  Per group D the coset sizes are all
    ord_D(q_mult) and the sizes sum to phi(D).
    """
    groups = {}
    for cs in representatives(q_mult, N):
        if odd_only and cs.rep % 2 == 0:
            continue
        D = additive_ord(cs.rep, N)
        groups.setdefault(D, []).append(cs)
    for D, css in groups.items():
        size = mult_ord(q_mult, D)
        if any(len(c) != size for c in css):
            raise AssertionError("coset size law violated in partition")
        if sum(len(c) for c in css) != euler_phi(D):
            raise AssertionError("partition sizes do not sum to phi")
    return groups
