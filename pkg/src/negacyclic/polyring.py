"""Dense univariate polynomials over a FieldCtx.

Carries the reciprocal map f*(x) = x^deg(f) f(0)^{-1} f(1/x), the
conjugate-reciprocal map f+(x) = conj(f*(x)), and the associated
self-reciprocity and irreducibility predicates.  gcds are normalized
monic so that "gcd = 1" literally means the constant polynomial 1.
"""

from .finitefield import frobenius
from .numtheory import factorize

__all__ = ["Poly", "x_poly", "xn_minus", "is_irreducible", "is_irreducible_trial"]


class Poly:
    """Immutable polynomial; coeffs ascending with no trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        zero = ctx.zero
        i = len(coeffs)
        while i > 0 and coeffs[i - 1] == zero:
            i -= 1
        self.ctx = ctx
        self.coeffs = tuple(coeffs[:i])

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_ints(cls, ctx, ints):
        """Polynomial with prime-subfield coefficients given as integers."""
        return cls(ctx, [ctx.element(c) for c in ints])

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [ctx.one])

    @classmethod
    def constant(cls, ctx, c):
        return cls(ctx, [c])

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.ctx.add(self.coeff(i), other.coeff(i))
                               for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self.ctx.sub(self.coeff(i), other.coeff(i))
                               for i in range(n)])

    def __neg__(self):
        return Poly(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if not self or not other:
            return Poly.zero(self.ctx)
        ctx = self.ctx
        out = [ctx.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == ctx.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return Poly(ctx, out)

    def scale(self, s):
        return Poly(self.ctx, [self.ctx.mul(s, c) for c in self.coeffs])

    def shift(self, k):
        """Multiply by x^k."""
        if not self:
            return self
        return Poly(self.ctx, (self.ctx.zero,) * k + self.coeffs)

    def divrem(self, other):
        """Quotient and remainder; other must be nonzero."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        ctx = self.ctx
        if self.degree < other.degree:
            return Poly.zero(ctx), self
        inv_lead = ctx.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [ctx.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = ctx.mul(rem[k + other.degree], inv_lead)
            quo[k] = c
            if c != ctx.zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = ctx.sub(rem[k + j], ctx.mul(c, b))
        return Poly(ctx, quo), Poly(ctx, rem)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def monic(self):
        if not self:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def gcd(self, other):
        """Monic generator of the ideal (self, other)."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def eval(self, a):
        ctx = self.ctx
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, a), c)
        return acc

    def pow_mod(self, k, modulus):
        """self^k mod modulus by square-and-multiply; k >= 0."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        r = Poly.one(self.ctx)
        b = self % modulus
        while k:
            if k & 1:
                r = (r * b) % modulus
            b = (b * b) % modulus
            k >>= 1
        return r

    # -- reciprocal structure ----------------------------------------------------

    def reciprocal_star(self):
        """f*(x) = x^deg(f) f(0)^{-1} f(1/x): reverse and rescale."""
        ctx = self.ctx
        if not self:
            raise ValueError("zero polynomial has no reciprocal")
        if self.coeffs[0] == ctx.zero:
            raise ValueError("constant term must be nonzero")
        inv0 = ctx.inv(self.coeffs[0])
        return Poly(ctx, [ctx.mul(inv0, c) for c in reversed(self.coeffs)])

    def conjugate(self, base_q):
        """Coefficient-wise conjugation c -> c^base_q."""
        return Poly(self.ctx, [frobenius(self.ctx, c, base_q) for c in self.coeffs])

    def dagger(self, base_q):
        """Conjugate-reciprocal f+(x) = conj(f*(x))."""
        return self.reciprocal_star().conjugate(base_q)

    def is_self_reciprocal(self):
        return self == self.reciprocal_star()

    def is_self_conj_reciprocal(self, base_q):
        return self == self.dagger(base_q)

    # -- text format ---------------------------------------------------------------

    def to_text(self):
        if not self:
            return "0"
        return ",".join(self.ctx.format_elem(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, ctx, s):
        s = s.strip()
        if s == "0":
            return cls.zero(ctx)
        return cls(ctx, [ctx.parse_elem(t) for t in s.split(",")])


def x_poly(ctx):
    """The monomial x."""
    return Poly(ctx, [ctx.zero, ctx.one])


def xn_minus(ctx, n, c):
    """x^n - c for a prime-subfield integer c."""
    coeffs = [ctx.element(-c)] + [ctx.zero] * (n - 1) + [ctx.one]
    return Poly(ctx, coeffs)


def is_irreducible(f):
    """q-power criterion: x^(q^d) = x mod f, with proper-subfield gcd checks."""
    if not f.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    ctx = f.ctx
    x = x_poly(ctx)
    if x.pow_mod(ctx.q ** d, f) != x % f:
        return False
    for r, _ in factorize(d).factors:
        w = x.pow_mod(ctx.q ** (d // r), f) - x
        if w.gcd(f).degree != 0:
            return False
    return True


def is_irreducible_trial(f):
    """Exhaustive trial division by monic divisors of degree <= deg/2.

    Independent oracle for is_irreducible; only sensible for tiny degrees
    and small fields.
    """
    if not f.is_monic():
        raise ValueError("irreducibility test expects a monic polynomial")
    d = f.degree
    if d < 1:
        return False
    ctx = f.ctx
    import itertools as _it

    for k in range(1, d // 2 + 1):
        for lows in _it.product(list(ctx.elements()), repeat=k):
            g = Poly(ctx, list(lows) + [ctx.one])
            if (f % g).degree < 0:
                return False
    return True
