"""Self-orthogonality of (extended) GRS codes via lambda-certificates.

``GRS_k(a, v)`` with ``k <= n // 2`` is Euclidean self-orthogonal exactly when
``v_i^2 = lam(a_i) / L(a_i)`` (all nonzero) for some nonzero polynomial ``lam`` of
degree at most ``n - 2k``.  For the extended code ``GRS_k(a, v, inf)`` with
``k <= (n + 1) // 2`` the same holds with ``lam`` of exact degree ``n - 2k + 1``
and leading coefficient ``-1``.  This module turns certificates into scaling
vectors and searches for certificates exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .gf import FieldSpec
from .grs import CodeError, EvalPoints, l_values

SEARCH_BUDGET = 10**7
_CHUNK = 1 << 14


class CriterionError(ValueError):
    """A lambda polynomial fails to certify a code at point ``index``."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class NonResidueError(CriterionError):
    pass


class ZeroLambdaError(CriterionError):
    pass


class BudgetError(ValueError):
    """An exhaustive scan would exceed its candidate budget."""


@dataclass(frozen=True)
class LambdaPoly:
    """Coefficients ``lam_0 .. lam_d`` (constant first) of a certificate.

    ``extended`` marks the normalization used for extended codes, where the
    top coefficient is ``-1``.
    """

    coeffs: tuple[int, ...]
    extended: bool = False

    def __post_init__(self):
        c = list(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, field: FieldSpec, x: int) -> int:
        return field.poly_eval(self.coeffs, x)

    @classmethod
    def constant(cls, c: int) -> "LambdaPoly":
        return cls((c,))

    def validate(self, field: FieldSpec, n: int, k: int) -> None:
        if self.extended:
            if not 1 <= k <= (n + 1) // 2:
                raise CodeError(f"extended criterion needs 1 <= k <= {(n + 1) // 2}, got {k}")
            want = n - 2 * k + 1
            if self.degree != want or self.coeffs[-1] != field.neg(1):
                raise CodeError(f"extended lambda must have degree {want} and leading coefficient -1")
        else:
            if not 1 <= k <= n // 2:
                raise CodeError(f"criterion needs 1 <= k <= {n // 2}, got {k}")
            if not self.coeffs:
                raise CodeError("lambda must be a nonzero polynomial")
            if self.degree > n - 2 * k:
                raise CodeError(f"lambda degree {self.degree} exceeds n - 2k = {n - 2 * k}")


def required_squares(points: EvalPoints, lam: LambdaPoly) -> list[int]:
    """``lam(a_i) / L(a_i)`` for every point."""
    F = points.field
    return [F.div(lam(F, a), L) for a, L in zip(points.a, l_values(points))]


def scaling_from_lambda(points: EvalPoints, k: int, lam: LambdaPoly) -> tuple[int, ...]:
    """Scaling vector certified by ``lam``: canonical roots of ``lam(a_i)/L(a_i)``."""
    F = points.field
    lam.validate(F, points.n, k)
    v = []
    for i, x in enumerate(required_squares(points, lam)):
        if x == 0:
            raise ZeroLambdaError(i, f"lambda vanishes at point {i} (a={points.a[i]})")
        if not F.is_qr(x):
            raise NonResidueError(
                i, f"lambda(a)/L(a) = {x} at point {i} (a={points.a[i]}) is not a square"
            )
        v.append(F.sqrt(x))
    return tuple(v)


def _free_count(n: int, k: int) -> int:
    return n - 2 * k + 1


def check_budget(field: FieldSpec, n: int, k: int) -> int:
    """Number of candidates a search would scan; raises if over budget."""
    free = _free_count(n, k)
    total = field.q**free if free >= 0 else 0
    if total > SEARCH_BUDGET:
        raise BudgetError(f"q^(n-2k+1) = {field.q}^{free} exceeds the search budget {SEARCH_BUDGET}")
    return total


def _candidate_block(field: FieldSpec, free: int, start: int, stop: int, extended: bool) -> np.ndarray:
    """Coefficient rows for candidate indices ``start..stop-1``; lam_0 varies fastest."""
    idx = np.arange(start, stop, dtype=np.int64)
    cols = [(idx // field.q**h) % field.q for h in range(free)]
    if extended:
        cols.append(np.full_like(idx, field.neg(1)))
    return np.stack(cols, axis=1) if cols else np.zeros((len(idx), 0), dtype=np.int64)


def iter_candidate_squares(points: EvalPoints, k: int, extended: bool) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(coeffs, squares)`` blocks over every candidate lambda in search order.

    ``squares[b, i]`` is ``lam_b(a_i) / L(a_i)`` for candidate row ``b``.  The
    zero polynomial is skipped in the plain case.
    """
    F = points.field
    n = points.n
    if extended:
        if not 1 <= k <= (n + 1) // 2:
            raise CodeError(f"extended criterion needs 1 <= k <= {(n + 1) // 2}, got {k}")
    elif not 1 <= k <= n // 2:
        raise CodeError(f"criterion needs 1 <= k <= {n // 2}, got {k}")
    total = check_budget(F, n, k)
    free = _free_count(n, k)
    a = np.array(points.a, dtype=np.int64)
    deg = free + int(extended)
    powers = np.stack([F.vpow(a, h) for h in range(deg)]) if deg else np.zeros((0, n), np.int64)
    linv = F.vinv(np.array(l_values(points), dtype=np.int64))
    start = 0 if extended else 1
    while start < total:
        stop = min(total, start + _CHUNK)
        coeffs = _candidate_block(F, free, start, stop, extended)
        vals = F.vsum(F.vmul(coeffs[:, :, None], powers[None, :, :]), axis=1)
        yield coeffs, F.vmul(vals, linv[None, :])
        start = stop


def search_lambda(points: EvalPoints, k: int, extended: bool = False) -> LambdaPoly | None:
    """First certifying lambda in lexicographic order (lam_0 fastest), else None."""
    F = points.field
    for coeffs, squares in iter_candidate_squares(points, k, extended):
        good = F.vis_qr(squares).all(axis=1)
        if good.any():
            return LambdaPoly(tuple(coeffs[int(good.argmax())]), extended)
    return None


def certified_square_vectors(points: EvalPoints, k: int, extended: bool = False) -> set[tuple[int, ...]]:
    """Every all-nonzero vector ``lam(a)/L(a)`` over the candidate space.

    A scaling ``v`` is lambda-certified exactly when ``v^2`` (entry-wise) lies
    in this set.
    """
    out: set[tuple[int, ...]] = set()
    for _, squares in iter_candidate_squares(points, k, extended):
        keep = squares[(squares != 0).all(axis=1)]
        out.update(map(tuple, keep.tolist()))
    return out


def selfdual_constant(points: EvalPoints) -> tuple[int, ...] | None:
    """Scaling for a self-dual ``[n, n/2]`` code with a constant certificate.

    Scans constants in encoding order; returns None if none works.
    """
    if points.n % 2:
        raise CodeError("a self-dual GRS code needs even n")
    F = points.field
    linv = [F.inv(L) for L in l_values(points)]
    for lam in range(1, F.q):
        xs = [F.mul(lam, x) for x in linv]
        if all(F.is_qr(x) for x in xs):
            return tuple(F.sqrt(x) for x in xs)
    return None


def selfdual_extended(points: EvalPoints) -> tuple[int, ...] | None:
    """Scaling making ``GRS_{(n+1)/2}(a, v, inf)`` self-dual, if ``-1/L(a_i)`` are all squares."""
    if points.n % 2 == 0:
        raise CodeError("the extended self-dual construction needs odd n")
    F = points.field
    xs = [F.neg(F.inv(L)) for L in l_values(points)]
    if all(F.is_qr(x) for x in xs):
        return tuple(F.sqrt(x) for x in xs)
    return None


def _poly_mul_linear(field: FieldSpec, poly: list[int], root: int) -> list[int]:
    """``poly * (x - root)``."""
    out = [0] * (len(poly) + 1)
    nr = field.neg(root)
    for h, c in enumerate(poly):
        out[h + 1] = field.add(out[h + 1], c)
        out[h] = field.add(out[h], field.mul(c, nr))
    return out


def recover_lambda(points: EvalPoints, squares) -> LambdaPoly:
    """Interpolate the unique ``lam`` of degree < n with ``lam(a_i) = squares_i * L(a_i)``.

    Lagrange form: ``lam(x) = sum_i squares_i * prod_{j != i} (x - a_j)``.
    """
    F = points.field
    n = points.n
    coeffs = [0] * n
    for i in range(n):
        basis = [1]
        for j, aj in enumerate(points.a):
            if j != i:
                basis = _poly_mul_linear(F, basis, aj)
        for h, c in enumerate(basis):
            coeffs[h] = F.add(coeffs[h], F.mul(int(squares[i]), c))
    return LambdaPoly(tuple(coeffs))
