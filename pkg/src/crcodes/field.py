"""Exact arithmetic in GF(p^m) with a fixed integer element encoding.

An element c_0 + c_1*x + ... + c_{m-1}*x^{m-1} of GF(p^m) is encoded as the
integer sum c_i * p^i.  The encoding makes 0 and 1 the additive and
multiplicative identities, is shared by the text file format, and for p = 2
turns field addition into XOR of codes.

The reducing polynomial is canonical: among all monic irreducibles of degree
m over GF(p) it is the one whose non-leading coefficients minimise the same
integer encoding.  Two calls for the same order always build the same field.
"""

from __future__ import annotations

import math

import numpy as np

MAX_FIELD_ORDER = 1 << 16


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p**m and p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    p = None
    for cand in range(2, math.isqrt(q) + 1):
        if q % cand == 0:
            p = cand
            break
    if p is None:
        return (q, 1)
    x, m = q, 0
    while x % p == 0:
        x //= p
        m += 1
    return (p, m) if x == 1 else None


def _digits(t: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(t % p)
        t //= p
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo a monic den over GF(p); coefficients low-first."""
    num = list(num)
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            for j in range(dn + 1):
                num[i - dn + j] = (num[i - dn + j] - c * den[j]) % p
    del num[dn:]
    return num


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for t in range(p**d):
            div = _digits(t, p, d) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Non-leading coefficients (c_0 first) of the canonical degree-m irreducible."""
    for t in range(p**m):
        low = _digits(t, p, m)
        if _is_irreducible(low + [1], p):
            return tuple(low)
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # unreachable


class GF:
    """Arithmetic in GF(q).  Elements are plain ints in [0, q).

    Scalar operations work on ints; the v-prefixed operations accept numpy
    integer arrays (broadcasting like the underlying numpy ops) and are exact.
    """

    _cache: dict[int, "GF"] = {}

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise ValueError(f"q={q} is not a prime power")
        if q > MAX_FIELD_ORDER:
            raise ValueError(f"q={q} exceeds the supported maximum {MAX_FIELD_ORDER}")
        self.q = q
        self.p, self.m = pm
        self.modulus: tuple[int, ...] = canonical_modulus(self.p, self.m) if self.m > 1 else ()
        if self.m > 1:
            self._build_tables()

    @classmethod
    def of(cls, q: int) -> "GF":
        """Cached constructor; fields are canonical so instances are shareable."""
        f = cls._cache.get(q)
        if f is None:
            f = cls._cache[q] = cls(q)
        return f

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    def __reduce__(self):
        return (GF.of, (self.q,))

    # -- construction of log/antilog tables (extension fields only)

    def _mul_codes_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_rem(prod, list(self.modulus) + [1], p)
        out = 0
        for i, c in enumerate(rem):
            out += c * p**i
        return out

    def _build_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._mul_codes_poly(x, g)
            if len(powers) == q - 1:
                break
        else:  # pragma: no cover - multiplicative group is always cyclic
            raise RuntimeError("no generator found")
        exp = np.array(powers, dtype=np.int64)
        self._exp2 = np.concatenate([exp, exp])  # doubled: index log a + log b directly
        log = np.zeros(q, dtype=np.int64)
        for i, v in enumerate(powers):
            log[v] = i
        self._log = log

    # -- scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p, res, pw = self.p, 0, 1
        while a or b:
            res += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return res

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p, res, pw = self.p, 0, 1
        while a:
            res += ((-a) % p) * pw
            a //= p
            pw *= p
        return res

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp2[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.m == 1:
            return pow(a, -1, self.p)
        return int(self._exp2[(self.q - 1 - self._log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def sqrt_of_minus_one(self) -> int | None:
        """Smallest a (in encoding order) with a*a = -1, or None if -1 is not a square."""
        minus_one = self.neg(1)
        for a in range(1, self.q):
            if self.mul(a, a) == minus_one:
                return a
        return None

    def dot(self, u, v) -> int:
        """Scalar product of two equal-length sequences of element codes."""
        acc = 0
        for a, b in zip(u, v, strict=True):
            acc = self.add(acc, self.mul(a, b))
        return acc

    # -- vectorised arithmetic on numpy integer arrays

    def _v_digit_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        aa = np.asarray(a, dtype=np.int64).copy()
        bb = np.asarray(b, dtype=np.int64).copy()
        aa, bb = np.broadcast_arrays(aa, bb)
        aa, bb = aa.copy(), bb.copy()
        res = np.zeros(aa.shape, dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            res += ((aa + bb) % p) * pw
            aa //= p
            bb //= p
            pw *= p
        return res

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a.astype(np.int64) + b) % self.p
        return self._v_digit_add(a, b)

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a)
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return (-a.astype(np.int64)) % self.p
        p = self.p
        aa = a.astype(np.int64).copy()
        res = np.zeros(aa.shape, dtype=np.int64)
        pw = 1
        for _ in range(self.m):
            res += ((-aa) % p) * pw
            aa //= p
            pw *= p
        return res

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return (a.astype(np.int64) * b) % self.p
        la = self._log[a]
        lb = self._log[b]
        out = self._exp2[la + lb]
        return np.where((a == 0) | (b == 0), 0, out)

    def vdot(self, rows: np.ndarray, vec) -> np.ndarray:
        """Field scalar product of each row of `rows` (shape (..., n)) with vec (n,)."""
        rows = np.asarray(rows)
        vec = np.asarray(vec)
        if self.m == 1:
            return (rows.astype(np.int64) @ vec.astype(np.int64)) % self.p
        acc = np.zeros(rows.shape[:-1], dtype=np.int64)
        for j in range(rows.shape[-1]):
            if vec[j]:
                acc = self.vadd(acc, self.vmul(rows[..., j], vec[j]))
        return acc
