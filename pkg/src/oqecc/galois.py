"""Exact arithmetic in GF(p^m) and its quadratic extension GF(p^(2m)).

Field elements are encoded as integers: the base-p digits of an encoding,
least significant digit first, are the coefficients of the element in the
polynomial basis 1, X, X^2, ...  An element of GF(q) with q = p^m is an
integer in [0, q); an element of GF(q^2) is an integer in [0, q^2).  This
encoding is shared by every data format in the package.

The modulus polynomial of each field is the monic irreducible polynomial of
the required degree whose non-leading coefficients have the smallest integer
encoding, found by exhaustive search at construction time.  A context is
therefore fully determined by (p, m) and identical across runs and machines.
"""

from __future__ import annotations

import operator
from functools import lru_cache

from .errors import (
    FieldTooLargeError,
    NotInSubfieldError,
    NotPrimeError,
    OutOfRangeError,
)

MAX_FIELD_SIZE = 64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    """Base-p digits of value, least significant first, padded to width."""
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return tuple(out)


def _undigits(digits, p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


def _poly_mul(a, b, p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, mod, p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial mod, over F_p."""
    a = list(a)
    deg = len(mod) - 1
    if len(a) < deg:
        a += [0] * (deg - len(a))
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(deg):
                a[i - deg + j] = (a[i - deg + j] - c * mod[j]) % p
    return a[:deg]


def _is_irreducible(poly, p: int) -> bool:
    """Test a monic polynomial for irreducibility by trial division.

    Fine for the desk-scale degrees used here (at most 12).
    """
    degree = len(poly) - 1
    if degree <= 0:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for t in range(p**d):
            divisor = list(_digits(t, p, d)) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


def _least_irreducible(p: int, degree: int) -> tuple[int, ...]:
    for t in range(p**degree):
        candidate = list(_digits(t, p, degree)) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError(f"no irreducible polynomial of degree {degree} over F_{p}")


class GfContext:
    """Arithmetic tables and metadata for GF(q), q = p^m, and for GF(q^2).

    Base-field multiplication and inversion are table driven; the quadratic
    extension uses direct polynomial arithmetic, which is plenty at q <= 64.
    Instances are immutable after construction and safe to share between
    threads.  Build them through :func:`gf_make`, which caches one context
    per (p, m) pair.
    """

    def __init__(self, p: int, m: int):
        p = operator.index(p)
        m = operator.index(m)
        if not _is_prime(p):
            raise NotPrimeError(f"p={p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m={m} must be >= 1")
        q = p**m
        if q > MAX_FIELD_SIZE:
            raise FieldTooLargeError(f"q = {p}^{m} = {q} exceeds the cap {MAX_FIELD_SIZE}")

        self.p = p
        self.m = m
        self.q = q
        self.q2 = q * q
        self.modulus_poly = _least_irreducible(p, m)
        self.ext_modulus_poly = _least_irreducible(p, 2 * m)

        mul = []
        for x in range(q):
            dx = _digits(x, p, m)
            row = []
            for y in range(q):
                prod = _poly_mul(dx, _digits(y, p, m), p)
                row.append(_undigits(_poly_rem(prod, self.modulus_poly, p), p))
            mul.append(tuple(row))
        self._mul = tuple(mul)

        inv = [0] * q
        for x in range(1, q):
            inv[x] = self._mul[x].index(1)
        self._inv = tuple(inv)

        trace = []
        for x in range(q):
            acc = x
            t = x
            for _ in range(m - 1):
                t = self.pow(t, p)
                acc = self.add(acc, t)
            assert acc < p, "trace landed outside the prime field"
            trace.append(acc)
        self._trace = tuple(trace)

        # The least root of the base modulus inside GF(q^2) fixes the embedding.
        root = None
        for cand in range(self.q2):
            acc = 0
            for coeff in reversed(self.modulus_poly):
                acc = self.ext_add(self.ext_mul(acc, cand), coeff)
            if acc == 0:
                root = cand
                break
        assert root is not None, "base modulus has no root in the quadratic extension"
        embed = []
        for x in range(q):
            value = 0
            power = 1
            for d in _digits(x, p, m):
                if d:
                    value = self.ext_add(value, self.ext_mul(d, power))
                power = self.ext_mul(power, root)
            embed.append(value)
        self.embed_table = tuple(embed)
        self._embed_index = {v: x for x, v in enumerate(embed)}
        assert len(self._embed_index) == q, "embedding is not injective"
        assert self.embed_table[1] == 1

        self.beta = find_normal_beta(self)
        self.beta_q = self.ext_pow(self.beta, q)

    # -- base field GF(q) ------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def _check(self, x) -> int:
        x = operator.index(x)
        if not 0 <= x < self.q:
            raise OutOfRangeError(f"{x} is not an element encoding of GF({self.q})")
        return x

    def add(self, x: int, y: int) -> int:
        x, y = self._check(x), self._check(y)
        p = self.p
        out = 0
        mult = 1
        while x or y:
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        x = self._check(x)
        p = self.p
        out = 0
        mult = 1
        while x:
            out += (-x % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return self._mul[self._check(x)][self._check(y)]

    def inv(self, x: int) -> int:
        x = self._check(x)
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q)")
        return self._inv[x]

    def pow(self, x: int, k: int) -> int:
        x = self._check(x)
        if k < 0:
            x, k = self.inv(x), -k
        out = 1
        while k:
            if k & 1:
                out = self._mul[out][x]
            x = self._mul[x][x]
            k >>= 1
        return out

    def trace(self, x: int) -> int:
        """Trace from GF(q) down to the prime field F_p."""
        return self._trace[self._check(x)]

    # -- quadratic extension GF(q^2) --------------------------------------

    def ext_elements(self) -> range:
        return range(self.q2)

    def _check_ext(self, x) -> int:
        x = operator.index(x)
        if not 0 <= x < self.q2:
            raise OutOfRangeError(f"{x} is not an element encoding of GF({self.q2})")
        return x

    def ext_add(self, x: int, y: int) -> int:
        x, y = self._check_ext(x), self._check_ext(y)
        p = self.p
        out = 0
        mult = 1
        while x or y:
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def ext_neg(self, x: int) -> int:
        x = self._check_ext(x)
        p = self.p
        out = 0
        mult = 1
        while x:
            out += (-x % p) * mult
            x //= p
            mult *= p
        return out

    def ext_sub(self, x: int, y: int) -> int:
        return self.ext_add(x, self.ext_neg(y))

    def ext_mul(self, x: int, y: int) -> int:
        x, y = self._check_ext(x), self._check_ext(y)
        w = 2 * self.m
        prod = _poly_mul(_digits(x, self.p, w), _digits(y, self.p, w), self.p)
        return _undigits(_poly_rem(prod, self.ext_modulus_poly, self.p), self.p)

    def ext_pow(self, x: int, k: int) -> int:
        x = self._check_ext(x)
        if k < 0:
            x, k = self.ext_inv(x), -k
        out = 1
        while k:
            if k & 1:
                out = self.ext_mul(out, x)
            x = self.ext_mul(x, x)
            k >>= 1
        return out

    def ext_inv(self, x: int) -> int:
        x = self._check_ext(x)
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q^2)")
        return self.ext_pow(x, self.q2 - 2)

    # -- moving between the fields ----------------------------------------

    def embed(self, x: int) -> int:
        """Map an element of GF(q) to its image in GF(q^2)."""
        return self.embed_table[self._check(x)]

    def is_embedded(self, z: int) -> bool:
        return self._check_ext(z) in self._embed_index

    def ext_to_base(self, z: int) -> int:
        """Pull an embedded extension element back to GF(q)."""
        z = self._check_ext(z)
        try:
            return self._embed_index[z]
        except KeyError:
            raise NotInSubfieldError(
                f"{z} lies outside the embedded GF({self.q}) inside GF({self.q2})"
            ) from None

    def ext_trace_to_base(self, z: int) -> int:
        """Trace to F_p of an extension element known to sit in embedded GF(q)."""
        return self.trace(self.ext_to_base(z))

    # ----------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GfContext) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((GfContext, self.p, self.m))

    def __repr__(self) -> str:
        return f"GfContext(p={self.p}, m={self.m})"


def find_normal_beta(ctx: GfContext) -> int:
    """Least beta in GF(q^2) such that (beta, beta^q) is a basis over GF(q).

    beta and beta^q are dependent exactly when beta^(q-1) falls inside the
    embedded base field, so the scan tests that ratio.  A normal element
    always exists for a quadratic extension.
    """
    for cand in range(1, ctx.q2):
        ratio = ctx.ext_mul(ctx.ext_pow(cand, ctx.q), ctx.ext_inv(cand))
        if not ctx.is_embedded(ratio):
            return cand
    raise AssertionError("no normal basis element found; impossible for q >= 2")


@lru_cache(maxsize=None)
def gf_make(p: int, m: int) -> GfContext:
    """Build (or fetch the cached) context for GF(p^m), p prime, p^m <= 64."""
    return GfContext(p, m)
