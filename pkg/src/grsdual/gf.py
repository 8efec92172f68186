"""Finite fields GF(p^m) for odd p, backed by exp/log tables.

Elements are plain integers.  The element ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}``
is encoded as ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``, so 0 and 1 encode
themselves and the prime subfield is ``range(p)``.

Scalar methods (``add``, ``mul``, ...) take and return ints.  The ``v``-prefixed
methods (``vadd``, ``vmul``, ...) do the same element-wise on numpy integer
arrays and are what the linear algebra in :mod:`grsdual.verify` runs on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

MAX_ORDER = 2**26
MAX_DEGREE = 12
# Fields up to this order get dense q x q addition/multiplication tables.
DENSE_TABLE_MAX = 1024


class FieldError(ValueError):
    """Invalid field parameters or an operation outside a field's domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` and p prime, or None."""
    if q < 2:
        return None
    p = prime_factors(q)[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


# -- polynomials over GF(p), coefficient lists with constant term first ------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the nonzero polynomial ``b``."""
    a = _trim([c % p for c in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, mod, p)


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _digits(c: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        c, d = divmod(c, p)
        out.append(d)
    return out


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = _digits(low, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # Counting ``low`` upward walks (c_{m-1}, ..., c_0) in lexicographic order.
    for low in range(p**m):
        poly = _digits(low, p, m) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _smallest_primitive(p: int, m: int, modulus: list[int]) -> int:
    q = p**m
    cofactors = [(q - 1) // f for f in prime_factors(q - 1)]
    for c in range(1, q):
        poly = _trim(_digits(c, p, m))
        if all(_poly_powmod(poly, e, modulus, p) != [1] for e in cofactors):
            return c
    raise AssertionError("multiplicative group has no generator")


def _power_tables(p: int, m: int, modulus: list[int], g: int) -> tuple[np.ndarray, np.ndarray]:
    """Encodings of g^0 .. g^(q-2) and the inverse map.

    Multiplication by g is a linear map of GF(p)^m; the powers are produced a
    block at a time by applying that map's B-th power to the previous block.
    """
    q = p**m
    n = q - 1
    mult = np.zeros((m, m), dtype=np.int64)
    gpoly = _trim(_digits(g, p, m))
    for j in range(m):
        col = _poly_mulmod(gpoly, [0] * j + [1], modulus, p)
        mult[: len(col), j] = col
    block = min(n, 4096)
    vecs = np.zeros((block, m), dtype=np.int64)
    cur = np.zeros(m, dtype=np.int64)
    cur[0] = 1
    for e in range(block):
        vecs[e] = cur
        cur = (mult @ cur) % p
    step = np.eye(m, dtype=np.int64)
    for _ in range(block):
        step = (mult @ step) % p
    weights = p ** np.arange(m, dtype=np.int64)
    exp = np.empty(2 * n, dtype=np.int64)
    done = 0
    while done < n:
        take = min(block, n - done)
        exp[done : done + take] = vecs[:take] @ weights
        done += take
        vecs = (vecs @ step.T) % p
    exp[n:] = exp[:n]
    log = np.full(q, -1, dtype=np.int64)
    log[exp[:n]] = np.arange(n, dtype=np.int64)
    if (log[1:] < 0).any():
        raise AssertionError("generator does not reach every nonzero element")
    return exp, log


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """Concrete field GF(p^m) with a fixed modulus and primitive element ``g``.

    Instances come from :func:`make_field`.  Equality and hashing use
    ``(p, m, modulus, g)`` only; the tables are derived from those.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    g: int
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)
    _pows: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus, self.g)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        c, w = 0, 1
        for _ in range(self.m):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            c += ((da + db) % p) * w
            w *= p
        return c

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return -a % p
        c, w = 0, 1
        for _ in range(self.m):
            a, da = divmod(a, p)
            c += (-da % p) * w
            w *= p
        return c

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[self.log_table[a] + self.log_table[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return int(self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self!r}")
            return 1 if e == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def gpow(self, e: int) -> int:
        """``g**e`` for any integer exponent."""
        return int(self.exp_table[e % (self.q - 1)])

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def dlog(self, a: int) -> int:
        if a == 0:
            raise FieldError("discrete log of 0 is undefined")
        return int(self.log_table[self._check(a)])

    def is_qr(self, a: int) -> bool:
        """Whether ``a`` is a nonzero square; 0 is not."""
        return a != 0 and self.dlog(a) % 2 == 0

    def sqrt(self, a: int) -> int:
        """Square root with the smaller encoding of the two; ``sqrt(0) == 0``."""
        if a == 0:
            return 0
        e = self.dlog(a)
        if e % 2:
            raise FieldError(f"{a} is not a square in {self!r}")
        w = self.gpow(e // 2)
        return min(w, self.neg(w))

    def elements(self) -> range:
        return range(self.q)

    def poly_eval(self, coeffs, x: int) -> int:
        """Evaluate ``sum(coeffs[h] * x**h)`` by Horner's rule."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def describe(self, a: int) -> str:
        """``a`` as encoding and as a power of g, e.g. ``7=g^5``."""
        return "0" if a == 0 else f"{a}=g^{self.dlog(a)}"

    # -- numpy element-wise arithmetic ------------------------------------

    @cached_property
    def _dense(self) -> tuple[np.ndarray, np.ndarray, np.ndarray] | None:
        if self.q > DENSE_TABLE_MAX:
            return None
        e = np.arange(self.q, dtype=np.int64)
        d = self._digits_arr(e)
        add = self._encode_arr(d[:, None, :] + d[None, :, :])
        neg = self._encode_arr(-d)
        la = self.log_table
        mul = self.exp_table[la[:, None] + la[None, :]]
        mul[0, :] = 0
        mul[:, 0] = 0
        return add, neg, mul

    def _digits_arr(self, a: np.ndarray) -> np.ndarray:
        return (np.asarray(a, dtype=np.int64)[..., None] // self._pows) % self.p

    def _encode_arr(self, d: np.ndarray) -> np.ndarray:
        return (d % self.p) @ self._pows

    def vadd(self, a, b) -> np.ndarray:
        if self._dense is not None:
            return self._dense[0][a, b]
        if self.m == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        return self._encode_arr(self._digits_arr(a) + self._digits_arr(b))

    def vneg(self, a) -> np.ndarray:
        if self._dense is not None:
            return self._dense[1][a]
        if self.m == 1:
            return -np.asarray(a) % self.p
        return self._encode_arr(-self._digits_arr(a))

    def vsub(self, a, b) -> np.ndarray:
        if self._dense is not None:
            add, neg, _ = self._dense
            return add[a, neg[b]]
        if self.m == 1:
            return (np.asarray(a) - np.asarray(b)) % self.p
        return self._encode_arr(self._digits_arr(a) - self._digits_arr(b))

    def vmul(self, a, b) -> np.ndarray:
        if self._dense is not None:
            return self._dense[2][a, b]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = self.exp_table[(self.log_table[a] * e) % (self.q - 1)]
        if e < 0 and (a == 0).any():
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return np.where(a == 0, int(e == 0), out)

    def vis_qr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a != 0) & (self.log_table[a] % 2 == 0)

    def vsum(self, a, axis=-1) -> np.ndarray:
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        d = self._digits_arr(a).sum(axis=axis if axis >= 0 else axis - 1)
        return self._encode_arr(d)

    def vdot(self, a, b) -> np.ndarray:
        """Euclidean inner products along the last axis (broadcasting)."""
        return self.vsum(self.vmul(a, b), axis=-1)


def _build_field(p: int, m: int) -> FieldSpec:
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if p == 2:
        raise FieldError("p must be odd")
    if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
        raise FieldError(f"extension degree m={m} outside 1..{MAX_DEGREE}")
    if p**m > MAX_ORDER:
        raise FieldError(f"q={p}^{m} exceeds the table bound {MAX_ORDER}")
    modulus = _smallest_irreducible(p, m)
    g = _smallest_primitive(p, m, list(modulus))
    exp, log = _power_tables(p, m, list(modulus), g)
    exp.setflags(write=False)
    log.setflags(write=False)
    pows = p ** np.arange(m, dtype=np.int64)
    pows.setflags(write=False)
    return FieldSpec(p, m, modulus, g, exp, log, pows)


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """The deterministic field GF(p^m).

    The modulus is the lexicographically smallest monic irreducible of degree
    ``m`` (coefficients compared from x^(m-1) down to the constant) and ``g``
    is the smallest encoding of multiplicative order ``p^m - 1``.
    """
    return _build_field(p, m)


def field_of_order(q: int) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"q={q} is not a prime power")
    return make_field(*pm)


def field_from_spec(p: int, m: int, modulus, g: int) -> FieldSpec:
    """Rebuild a field from serialized parameters.

    Encodings depend on the modulus only, so the modulus must be the canonical
    one; a different ``g`` is accepted as long as it is primitive.
    """
    f = make_field(p, m)
    if tuple(modulus) != f.modulus:
        raise FieldError(
            f"modulus {list(modulus)} is not the canonical GF({p}^{m}) modulus {list(f.modulus)}"
        )
    if g != f.g and not (0 < g < f.q and np.gcd(f.dlog(g), f.q - 1) == 1):
        raise FieldError(f"g={g} is not a primitive element of {f!r}")
    return f
