"""Sweep-scale construction of the irreducible factors of x^N - 1.

Minimal polynomials of all cyclotomic cosets mod N are assembled one
cyclotomic polynomial at a time: Phi_D is reduced mod p, split into its
degree-k irreducible factors over F_q by a seeded equal-degree split, and
the factors are matched to cosets by evaluating them at powers of the
root alpha = t in F_q[t]/(h), h being the lexicographically least factor.
Coefficients live on numpy "planes": an F_{p^f}[x] polynomial of degree d
is an (f, d+1) integer array of prime-field coordinates, so that ring
products are plain (2-D) convolutions followed by basis reductions.

Everything here is deterministic: the equal-degree split draws its
randomness from a seed derived from (p, f, D) alone.

Internal module; the public surface is `factorization`.
"""

import random
from math import gcd

import numpy as np
from scipy.signal import fftconvolve

from .finitefield import primitive_root_of_unity
from .numtheory import euler_phi, factorize, mult_ord

_MODP_CACHE = {}


def _phi_mod_p(p, D):
    """Coefficients of the cyclotomic polynomial Phi_D reduced mod p."""
    cache = _MODP_CACHE.setdefault(p, {})
    if D in cache:
        return cache[D]
    if D == 1:
        out = np.array([p - 1, 1], dtype=np.int64)
    else:
        prod = np.array([1], dtype=np.int64)
        for d in factorize(D).divisors():
            if d < D:
                prod = np.convolve(prod, _phi_mod_p(p, d)) % p
        num = np.zeros(D + 1, dtype=np.int64)
        num[0] = p - 1
        num[D] = 1
        dq = D - (len(prod) - 1)
        quo = np.zeros(dq + 1, dtype=np.int64)
        rem = num.copy()
        for i in range(dq, -1, -1):
            c = rem[i + len(prod) - 1]
            quo[i] = c
            if c:
                rem[i:i + len(prod)] = (rem[i:i + len(prod)] - c * prod) % p
        if rem.any():
            raise AssertionError("cyclotomic division left a remainder")
        out = quo
    cache[D] = out
    return out


class Kernel:
    """Plane arithmetic for F_{p^f}[x] tied to one FieldCtx."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.p = ctx.p
        self.f = ctx.e
        self.Q = ctx.q
        f, p = self.f, self.p
        if f > 1:
            rows = []
            cur = np.array([(-c) % p for c in ctx.modulus[:f]], dtype=np.int64)
            rows.append(cur.copy())
            for _ in range(2 * f - 3):
                top = cur[f - 1]
                nxt = np.roll(cur, 1)
                nxt[0] = 0
                if top:
                    nxt = (nxt + top * rows[0]) % p
                cur = nxt
                rows.append(cur.copy())
            self.yrows = np.stack(rows)  # y^(f+j) mod modulus, j = 0..2f-3
        else:
            self.yrows = np.zeros((0, 1), dtype=np.int64)

    # -- representation helpers ------------------------------------------------

    def zero_poly(self):
        return np.zeros((self.f, 0), dtype=np.int64)

    def one_poly(self):
        out = np.zeros((self.f, 1), dtype=np.int64)
        out[0, 0] = 1
        return out

    def elem_col(self, elem):
        """FieldCtx element tuple -> (f,) coordinate vector."""
        return np.array(elem, dtype=np.int64)

    def from_int_coeffs(self, coeffs):
        """Prime-subfield coefficients -> planes."""
        arr = np.zeros((self.f, len(coeffs)), dtype=np.int64)
        arr[0] = np.asarray(coeffs, dtype=np.int64) % self.p
        return arr

    @staticmethod
    def deg(a):
        return a.shape[1] - 1

    @staticmethod
    def trim(a):
        nz = np.nonzero(np.any(a != 0, axis=0))[0]
        if len(nz) == 0:
            return a[:, :0]
        return a[:, :nz[-1] + 1]

    def eq(self, a, b):
        a, b = self.trim(a), self.trim(b)
        return a.shape == b.shape and np.array_equal(a, b)

    # -- ring operations ---------------------------------------------------------

    def y_reduce(self, arr):
        """Fold y-coordinate rows beyond f back into the power basis."""
        Y = arr.shape[0]
        if Y <= self.f:
            return arr % self.p
        k = Y - self.f
        out = arr[:self.f] + np.einsum("jy,j...->y...", self.yrows[:k], arr[self.f:])
        return out % self.p

    def conv_raw(self, a, b):
        """Full 2-D convolution without the y-reduction, exact over int64.

        Three regimes: plain integer convolution for one coordinate plane,
        a Kronecker-packed 1-D integer convolution for small operands (the
        plane count is tiny, so packing planes into a stride leaves no
        carry overlap), and FFT with an integrality guard for large ones
        (values stay far below the float64 exact-integer range).
        """
        fa, la = a.shape
        fb, lb = b.shape
        if fa == 1 and fb == 1:
            return np.convolve(a[0], b[0])[None, :]
        fs, ls = fa + fb - 1, la + lb - 1
        if fa * fb >= 16 and la + lb >= 128:
            raw = fftconvolve(a, b)
            out = np.rint(raw)
            if (np.abs(raw - out) > 1e-3).any():
                raise AssertionError("fft convolution lost integrality")
            return out.astype(np.int64)
        pa = np.zeros((la, fs), dtype=np.int64)
        pa[:, :fa] = a.T
        pb = np.zeros((lb, fs), dtype=np.int64)
        pb[:, :fb] = b.T
        flat = np.convolve(pa.reshape(-1), pb.reshape(-1))
        return flat[:ls * fs].reshape(ls, fs).T

    def conv(self, a, b):
        """Full product of two plane polynomials."""
        if a.shape[1] == 0 or b.shape[1] == 0:
            return self.zero_poly()
        if self.f == 1:
            return np.convolve(a[0], b[0])[None, :] % self.p
        return self.y_reduce(self.conv_raw(a, b))

    def scalar_poly(self, c, a):
        """Product of a field element (coordinate vector) with a polynomial."""
        if self.f == 1:
            return (c[0] * a) % self.p
        t3 = np.einsum("y,zl->yzl", c, a)
        out = np.zeros((2 * self.f - 1, a.shape[1]), dtype=np.int64)
        for z in range(self.f):
            out[z:z + self.f] += t3[:, z, :]
        return self.y_reduce(out)

    def add(self, a, b):
        n = max(a.shape[1], b.shape[1])
        out = np.zeros((self.f, n), dtype=np.int64)
        out[:, :a.shape[1]] = a
        out[:, :b.shape[1]] += b
        return self.trim(out % self.p)

    def sub(self, a, b):
        n = max(a.shape[1], b.shape[1])
        out = np.zeros((self.f, n), dtype=np.int64)
        out[:, :a.shape[1]] = a
        out[:, :b.shape[1]] -= b
        return self.trim(out % self.p)

    def elem_inv_col(self, col):
        return self.elem_col(self.ctx.inv(tuple(int(v) for v in col)))

    def monic(self, a):
        a = self.trim(a)
        if a.shape[1] == 0:
            return a
        lead = a[:, -1]
        one = np.zeros(self.f, dtype=np.int64)
        one[0] = 1
        if np.array_equal(lead, one):
            return a
        inv = self.elem_inv_col(lead)
        return self.trim(self.scalar_poly(inv, a))

    def divmod(self, a, b):
        """Quotient and remainder by a nonzero polynomial."""
        b = self.trim(b)
        if b.shape[1] == 0:
            raise ZeroDivisionError("division by zero polynomial")
        bm = self.monic(b)
        lead_inv = self.elem_inv_col(b[:, -1])
        a = self.trim(a).copy()
        db, da = self.deg(bm), self.deg(a)
        if da < db:
            return self.zero_poly(), a
        quo = np.zeros((self.f, da - db + 1), dtype=np.int64)
        rem = a
        for i in range(da - db, -1, -1):
            c = rem[:, i + db]
            if c.any():
                quo[:, i] = c
                if db:
                    step = self.scalar_poly(c, bm[:, :db])
                    rem[:, i:i + db] = (rem[:, i:i + db] - step) % self.p
                rem[:, i + db] = 0
        # undo the monic normalization of b on the quotient
        if not np.array_equal(b[:, -1], bm[:, -1]):
            quo = self.scalar_poly(lead_inv, quo)
        return self.trim(quo), self.trim(rem[:, :db])

    def gcd(self, a, b):
        a, b = self.trim(a).copy(), self.trim(b).copy()
        while b.shape[1] > 0:
            da, db = a.shape[1] - 1, b.shape[1] - 1
            if da < db:
                a, b = b, a
                continue
            bm = self.monic(b)
            # eliminate top coefficients of a in place down to deg < db
            for i in range(da - db, -1, -1):
                c = a[:, i + db]
                if c.any():
                    if db:
                        step = self.scalar_poly(c, bm[:, :db])
                        a[:, i:i + db] = (a[:, i:i + db] - step) % self.p
                    a[:, i + db] = 0
            a, b = bm, self.trim(a)
        return self.monic(a)


class ModArith:
    """Arithmetic mod a fixed monic plane polynomial of degree d >= 1.

    Reduction of products is a single matrix product against precomputed
    images of x^d..x^(2d-2), flattened over the (coefficient, coordinate)
    pairs so BLAS does the work.
    """

    def __init__(self, kern, g):
        g = kern.monic(g)
        self.kern = kern
        self.g = g
        self.d = kern.deg(g)
        f, p, d = kern.f, kern.p, self.d
        x_d = (-g[:, :d]) % p  # x^d mod g
        self.x_d = x_d
        rows = [x_d]
        cur = x_d
        for _ in range(d - 2):
            top = cur[:, d - 1]
            shifted = np.zeros((f, d), dtype=np.int64)
            shifted[:, 1:] = cur[:, :d - 1]
            if top.any():
                shifted = (shifted + kern.scalar_poly(top, x_d)) % p
            cur = shifted
            rows.append(cur)
        if d >= 2:
            base = np.stack(rows)  # (d-1, f, d): x^(d+j) mod g
        else:
            base = np.zeros((0, f, d), dtype=np.int64)
        # flat reduction matrix over F_p: row (j*f + y) is y^y * x^(d+j) mod g
        if d >= 2 and f > 1:
            mats = []  # per y shift: (d-1, f, d)
            for y in range(f):
                if y == 0:
                    mats.append(base)
                    continue
                padded = np.concatenate(
                    [np.zeros((d - 1, y, d), dtype=np.int64), base], axis=1)
                red = np.moveaxis(kern.y_reduce(np.moveaxis(padded, 1, 0)), 0, 1)
                mats.append(red)
            flat = np.stack(mats, axis=1)  # (d-1, f_in, f_out, d)
            self.rmat = flat.transpose(0, 1, 3, 2).reshape((d - 1) * f, d * f).astype(np.float64)
        elif d >= 2:
            self.rmat = base[:, 0, :].astype(np.float64)  # (d-1, d)
        else:
            self.rmat = np.zeros((0, d * f))

    def reduce(self, a):
        """Reduce planes (f, L) mod g, returning padded planes (f, d)."""
        kern, d, f, p = self.kern, self.d, self.kern.f, self.kern.p
        a = kern.trim(a)
        L = a.shape[1]
        if L <= d:
            out = np.zeros((f, d), dtype=np.int64)
            out[:, :L] = a
            return out
        low = a[:, :d]
        high = a[:, d:]
        H = high.shape[1]
        if f == 1:
            corr = high[0].astype(np.float64) @ self.rmat[:H]
            corr = np.rint(corr).astype(np.int64)[None, :]
        else:
            flat_high = high.T.reshape(H * f).astype(np.float64)
            corr = flat_high @ self.rmat[:H * f]
            corr = np.rint(corr).astype(np.int64).reshape(d, f).T
        return (low + corr) % p

    def mulmod(self, a, b):
        return self.reduce(self.kern.conv(a, b))

    def _mul_padded(self, a, b):
        """Product of two width-d operands, reduced; skips shape bookkeeping."""
        kern, d, f, p = self.kern, self.d, self.kern.f, self.kern.p
        red = kern.y_reduce(kern.conv_raw(a, b))  # (f, 2d-1)
        if d == 1:
            return red
        low = red[:, :d]
        high = red[:, d:]
        if f == 1:
            corr = np.rint(high[0].astype(np.float64) @ self.rmat).astype(np.int64)[None, :]
        else:
            flat = high.T.reshape((d - 1) * f).astype(np.float64)
            corr = np.rint(flat @ self.rmat).astype(np.int64).reshape(d, f).T
        return (low + corr) % p

    def powmod(self, a, e):
        kern = self.kern
        result = np.zeros((kern.f, self.d), dtype=np.int64)
        result[0, 0] = 1
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self._mul_padded(result, base)
            e >>= 1
            if e:
                base = self._mul_padded(base, base)
        return result

    def times_x(self, a):
        """x * a mod g for padded planes a of width d."""
        f, d, p = self.kern.f, self.d, self.kern.p
        top = a[:, d - 1]
        out = np.zeros((f, d), dtype=np.int64)
        out[:, 1:] = a[:, :d - 1]
        if top.any():
            out = (out + self.kern.scalar_poly(top, self.x_d)) % p
        return out


_KERNELS = {}


def kernel_for(ctx):
    key = (ctx.p, ctx.e, ctx.modulus)
    if key not in _KERNELS:
        _KERNELS[key] = Kernel(ctx)
    return _KERNELS[key]


def _equal_degree_split(kern, poly, k, rng):
    """Split a squarefree product of degree-k irreducibles into its factors."""
    out = []
    stack = [kern.monic(poly)]
    exp = (kern.Q ** k - 1) // 2
    while stack:
        g = stack.pop()
        d = kern.deg(g)
        if d == k:
            out.append(g)
            continue
        ma = ModArith(kern, g)
        while True:
            w = np.array([[rng.randrange(kern.p) for _ in range(d)]
                          for _ in range(kern.f)], dtype=np.int64)
            u = ma.powmod(w, exp)
            u[0, 0] = (u[0, 0] - 1) % kern.p
            h = kern.gcd(kern.trim(u), g)
            dh = kern.deg(h)
            if 0 < dh < d:
                stack.append(h)
                stack.append(kern.divmod(g, h)[0])
                break
    return out


def _canonical_sort(factors):
    return sorted(factors, key=lambda a: tuple(int(v) for v in a.T.ravel()))


_PHI_TABLES = {}


def phi_table(ctx, D):
    """Factors of Phi_D over ctx, keyed by primitive coset representative.

    Returns {rep: planes}; rep runs over the minimal elements of the
    cyclotomic cosets mod D consisting of residues coprime to D.
    """
    key = (ctx.p, ctx.e, ctx.modulus, D)
    if key in _PHI_TABLES:
        return _PHI_TABLES[key]
    p, Q = ctx.p, ctx.q
    if D % p == 0:
        raise ValueError("D must be coprime to the characteristic")
    kern = kernel_for(ctx)
    if D == 1:
        table = {0: kern.from_int_coeffs([-1, 1])}
        _PHI_TABLES[key] = table
        return table

    k = mult_ord(Q, D)
    phi = euler_phi(D)
    c = phi // k
    reps = _primitive_reps(Q, D)

    if k == 1:
        alpha = primitive_root_of_unity(ctx, D)
        table = {}
        for i in reps:  # singleton cosets
            root = alpha.power(i)
            arr = np.zeros((kern.f, 2), dtype=np.int64)
            arr[:, 0] = kern.elem_col(ctx.neg(root))
            arr[:, 1] = kern.elem_col(ctx.one)
            table[i] = arr
        _verify_phi_product(kern, D, table)
        _PHI_TABLES[key] = table
        return table

    phi_planes = kern.from_int_coeffs(_phi_mod_p(p, D))
    if c == 1:
        table = {1: phi_planes}
        _PHI_TABLES[key] = table
        return table

    rng = random.Random(f"negacyclic:{ctx.p}:{ctx.e}:{D}")
    factors = _canonical_sort(_equal_degree_split(kern, phi_planes, k, rng))
    h = factors[0]
    ma = ModArith(kern, h)

    # powers of alpha = t mod h
    A = np.zeros((D, kern.f, k), dtype=np.int64)
    cur = np.zeros((kern.f, k), dtype=np.int64)
    cur[0, 0] = 1
    A[0] = cur
    for m in range(1, D):
        cur = ma.times_x(cur)
        A[m] = cur

    table = {1: h}
    remaining = [r for r in reps if r != 1]
    for g in factors[1:]:
        hits = _batched_roots(kern, g, A, remaining, D)
        if len(hits) != 1:
            raise AssertionError(f"factor matched {len(hits)} cosets at D={D}")
        rep = remaining[hits[0]]
        table[rep] = g
        remaining.remove(rep)
    if remaining:
        raise AssertionError("unassigned cosets remain")
    _verify_phi_product(kern, D, table)
    table = dict(sorted(table.items()))
    _PHI_TABLES[key] = table
    return table


def _batched_roots(kern, g, A, candidates, D):
    """Indices of candidate reps i with g(alpha^i) = 0, evaluated in bulk."""
    f, p = kern.f, kern.p
    k1 = g.shape[1]  # k + 1 coefficients
    idx = (np.asarray(candidates)[:, None] * np.arange(k1)[None, :]) % D
    rows = A[idx]  # (C, k1, f, k)
    if f == 1:
        vals = np.einsum("j,cjzt->czt", g[0].astype(np.float64),
                         rows.astype(np.float64))
        vals = np.rint(vals).astype(np.int64) % p
    else:
        t4 = np.einsum("yj,cjzt->cyzt", g.astype(np.float64),
                       rows.astype(np.float64))
        t4 = np.rint(t4).astype(np.int64)
        C, _, _, kk = t4.shape
        folded = np.zeros((C, 2 * f - 1, kk), dtype=np.int64)
        for z in range(f):
            folded[:, z:z + f] += t4[:, :, z, :]
        vals = np.moveaxis(kern.y_reduce(np.moveaxis(folded, 1, 0)), 0, 1) % p
    return list(np.nonzero(~vals.reshape(vals.shape[0], -1).any(axis=1))[0])


def _primitive_reps(Q, D):
    """Minimal representatives of the cosets of residues coprime to D."""
    seen = set()
    reps = []
    for i in range(D):
        if gcd(i, D) != 1 or i in seen:
            continue
        orbit = {i}
        x = i * Q % D
        while x != i:
            orbit.add(x)
            x = x * Q % D
        seen |= orbit
        reps.append(min(orbit))
    return reps


def _verify_phi_product(kern, D, table):
    prod = kern.one_poly()
    for arr in table.values():
        prod = kern.conv(prod, arr)
    if not kern.eq(prod, kern.from_int_coeffs(_phi_mod_p(kern.p, D))):
        raise AssertionError(f"factor product differs from Phi_{D}")


_FACTOR_TABLES = {}


def factor_table(ctx, N):
    """All irreducible factors of x^N - 1 over ctx, keyed by coset rep mod N."""
    key = (ctx.p, ctx.e, ctx.modulus, N)
    if key in _FACTOR_TABLES:
        return _FACTOR_TABLES[key]
    if N % ctx.p == 0:
        raise ValueError("N must be coprime to the characteristic")
    out = {}
    for D in factorize(N).divisors():
        scale = N // D
        for rep, arr in phi_table(ctx, D).items():
            out[rep * scale] = arr
    total = sum(arr.shape[1] - 1 for arr in out.values())
    if total != N:
        raise AssertionError("factor degrees do not sum to N")
    out = dict(sorted(out.items()))
    _FACTOR_TABLES[key] = out
    return out


def clear_caches():
    """Drop all memoized tables (used by determinism tests)."""
    _PHI_TABLES.clear()
    _FACTOR_TABLES.clear()
    _KERNELS.clear()
    _MODP_CACHE.clear()
