"""Exhaustive two-sided check of the lambda-criterion on tiny fields.

For every set of ``n`` distinct points (up to order) and every scaling vector
``v`` in ``(GF(q)^*)^n``, self-orthogonality is decided twice:

* by the Gram test on the generator matrix (:mod:`grsdual.verify`), and
* by asking whether ``v^2`` equals ``lam(a)/L(a)`` for some admissible ``lam``
  (:mod:`grsdual.ortho`).

The criterion claims the two always agree.  For every self-orthogonal ``v``
the certificate is also recovered by interpolation and its shape checked
(degree at most ``n - 2k``; for extended codes exact degree ``n - 2k + 1`` with
leading coefficient ``-1``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .gf import FieldSpec
from .grs import CodeError, EvalPoints
from .ortho import BudgetError, certified_square_vectors, check_budget, recover_lambda
from .verify import gram_zero_batch

CENSUS_BUDGET = 10**7


@dataclass
class CensusResult:
    q: int
    n: int
    k: int
    extended: bool
    point_sets: int = 0
    achievable_sets: int = 0
    scalings: int = 0
    self_orthogonal: int = 0
    agreements: int = 0
    certificate_shape_ok: int = 0
    disagreements: list = field(default_factory=list)
    bad_certificates: list = field(default_factory=list)

    @property
    def agreement(self) -> float:
        """Fraction of (points, v) pairs where both tests agree; 1.0 when there are none."""
        return self.agreements / self.scalings if self.scalings else 1.0

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.bad_certificates

    def as_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items()}
        d["agreement"] = self.agreement
        d["ok"] = self.ok
        return d


def check_census_budget(field_: FieldSpec, n: int, k: int, extended: bool) -> None:
    q = field_.q
    if extended:
        if not 1 <= k <= (n + 1) // 2:
            raise CodeError(f"extended census needs 1 <= k <= {(n + 1) // 2}, got k={k}")
    elif not 1 <= k <= n // 2:
        raise CodeError(f"census needs 1 <= k <= {n // 2}, got k={k}")
    work = math.comb(q, n) * (q - 1) ** n
    if work > CENSUS_BUDGET:
        raise BudgetError(f"C(q,n)*(q-1)^n = {work} scalings exceeds the census budget {CENSUS_BUDGET}")
    check_budget(field_, n, k)


def _all_scalings(q: int, n: int) -> np.ndarray:
    grids = np.meshgrid(*([np.arange(1, q)] * n), indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def run_census(field_: FieldSpec, n: int, k: int, extended: bool = False) -> CensusResult:
    check_census_budget(field_, n, k, extended)
    F = field_
    res = CensusResult(F.q, n, k, extended)
    if n > F.q:
        return res
    scalings = _all_scalings(F.q, n)
    squares = F.vmul(scalings, scalings)
    N = n + int(extended)
    neg1 = F.neg(1)
    for a in itertools.combinations(range(F.q), n):
        pts = EvalPoints(F, a)
        res.point_sets += 1
        powers = np.stack([F.vpow(np.array(a), m) for m in range(k)])
        Gs = np.zeros((len(scalings), k, N), dtype=np.int64)
        Gs[:, :, :n] = F.vmul(scalings[:, None, :], powers[None, :, :])
        if extended:
            Gs[:, k - 1, n] = 1
        gram = gram_zero_batch(F, Gs)
        certified = certified_square_vectors(pts, k, extended)
        lam_ok = np.array([tuple(x) in certified for x in squares.tolist()], dtype=bool)
        res.scalings += len(scalings)
        res.self_orthogonal += int(gram.sum())
        res.agreements += int((gram == lam_ok).sum())
        if gram.any():
            res.achievable_sets += 1
        for b in np.nonzero(gram != lam_ok)[0]:
            res.disagreements.append((a, tuple(int(x) for x in scalings[b])))
        for b in np.nonzero(gram)[0]:
            lam = recover_lambda(pts, squares[b])
            if extended:
                shaped = lam.degree == n - 2 * k + 1 and lam.coeffs[-1] == neg1
            else:
                shaped = 0 <= lam.degree <= n - 2 * k
            if shaped:
                res.certificate_shape_ok += 1
            else:
                res.bad_certificates.append((a, tuple(int(x) for x in scalings[b]), lam.coeffs))
    return res
