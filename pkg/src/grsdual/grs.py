"""Generalized Reed-Solomon codes and their evaluation-set arithmetic."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldError, FieldSpec


class CodeError(ValueError):
    """Ill-formed evaluation points, scaling vectors or code parameters."""


@dataclass(frozen=True)
class EvalPoints:
    """Ordered tuple of pairwise distinct field elements."""

    field: FieldSpec
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        n, q = len(self.a), self.field.q
        if not 1 <= n <= q:
            raise CodeError(f"need 1 <= n <= q, got n={n}, q={q}")
        if any(not 0 <= x < q for x in self.a):
            raise CodeError("evaluation point outside the field")
        if len(set(self.a)) != n:
            raise CodeError("evaluation points are not pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.a)

    def __len__(self):
        return len(self.a)


@dataclass(frozen=True)
class GrsCode:
    """``GRS_k(a, v)``, or ``GRS_k(a, v, inf)`` when ``extended`` is set.

    The extended code appends the coefficient of ``x^(k-1)`` as an extra
    coordinate, giving length ``n + 1``.
    """

    points: EvalPoints
    v: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        n = self.points.n
        if len(self.v) != n:
            raise CodeError(f"scaling vector has length {len(self.v)}, expected {n}")
        if any(x == 0 for x in self.v):
            raise CodeError("scaling vector entries must be nonzero")
        if any(not 0 < x < self.field.q for x in self.v):
            raise CodeError("scaling entry outside the field")
        if not 1 <= self.k <= n:
            raise CodeError(f"dimension k={self.k} outside 1..{n}")

    @property
    def field(self) -> FieldSpec:
        return self.points.field

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def length(self) -> int:
        return self.n + int(self.extended)


def l_value(points: EvalPoints, i: int) -> int:
    """``prod_{j != i} (a_i - a_j)`` by direct multiplication."""
    if not 0 <= i < points.n:
        raise IndexError(f"index {i} out of range for {points.n} points")
    F = points.field
    ai = points.a[i]
    acc = 1
    for j, aj in enumerate(points.a):
        if j != i:
            acc = F.mul(acc, F.sub(ai, aj))
    return acc


def l_values(points: EvalPoints) -> list[int]:
    """All of ``L(a_0), ..., L(a_{n-1})``; same products as :func:`l_value`, batched."""
    F = points.field
    a = np.array(points.a, dtype=np.int64)
    n = len(a)
    out = np.empty(n, dtype=np.int64)
    step = max(1, 2**20 // n)
    for s in range(0, n, step):
        rows = np.arange(s, min(n, s + step))
        diff = F.vsub(a[rows, None], a[None, :])
        diff[np.arange(len(rows)), rows] = 1
        logs = F.log_table[diff].sum(axis=1) % (F.q - 1)
        out[rows] = F.exp_table[logs]
    return out.tolist()


def power_sum_check(points: EvalPoints, m: int) -> int:
    """``sum_i a_i^m / L(a_i)``: 0 for ``m <= n-2`` and 1 for ``m = n-1``."""
    if not 0 <= m <= points.n - 1:
        raise CodeError(f"exponent m={m} outside 0..{points.n - 1}")
    F = points.field
    total = 0
    for i, ai in enumerate(points.a):
        total = F.add(total, F.div(F.pow(ai, m), l_value(points, i)))
    return total


def generator_matrix(code: GrsCode) -> np.ndarray:
    """Monomial-basis generator matrix: row ``m`` is ``(v_i a_i^m)``."""
    F = code.field
    a = np.array(code.points.a, dtype=np.int64)
    v = np.array(code.v, dtype=np.int64)
    rows = np.zeros((code.k, code.length), dtype=np.int64)
    for m in range(code.k):
        rows[m, : code.n] = F.vmul(v, F.vpow(a, m))
    if code.extended:
        rows[code.k - 1, code.n] = 1
    return rows


def coset_product(field: FieldSpec, mdiv: int, i: int) -> int:
    """Product over the other powers of a primitive ``mdiv``-th root of unity.

    With ``alpha = g^((q-1)/mdiv)`` both ``prod_{j != i} (alpha^i - alpha^j)``
    and ``mdiv * alpha^(-i)`` are computed; they must agree.  ``i`` runs over
    ``1..mdiv`` as in the usual statement of the identity.
    """
    q = field.q
    if mdiv < 1 or (q - 1) % mdiv:
        raise FieldError(f"{mdiv} does not divide q-1={q - 1}")
    if not 1 <= i <= mdiv:
        raise CodeError(f"index i={i} outside 1..{mdiv}")
    alpha = field.gpow((q - 1) // mdiv)
    ai = field.pow(alpha, i)
    direct = 1
    for j in range(1, mdiv + 1):
        if j != i:
            direct = field.mul(direct, field.sub(ai, field.pow(alpha, j)))
    closed = field.mul(field.from_int(mdiv), field.pow(alpha, -i))
    if direct != closed:
        raise AssertionError(
            f"root-of-unity product mismatch in {field!r}: m={mdiv}, i={i}, "
            f"direct={direct}, closed={closed}"
        )
    return closed
