"""Property checks for linear codes by exact linear algebra over GF(q).

Nothing here knows about lambda-certificates or the coset constructions; a
code is judged from its generator matrix alone.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec
from .grs import GrsCode, generator_matrix

EXHAUSTIVE_BUDGET = 10**6
_BATCH = 4096


class VerifyError(ValueError):
    pass


def gram_matrix(field: FieldSpec, G) -> np.ndarray:
    """``G @ G.T`` over the field."""
    G = np.asarray(G, dtype=np.int64)
    k = G.shape[0]
    out = np.zeros((k, k), dtype=np.int64)
    step = max(1, 2**22 // max(1, G.size))
    for s in range(0, k, step):
        out[s : s + step] = field.vdot(G[s : s + step, None, :], G[None, :, :])
    return out


def gram_check(field: FieldSpec, G) -> bool:
    """True iff every pair of rows of ``G`` is orthogonal (including each row with itself)."""
    G = np.asarray(G, dtype=np.int64)
    if G.size == 0:
        return True
    return not gram_matrix(field, G).any()


def gram_zero_batch(field: FieldSpec, Gs) -> np.ndarray:
    """:func:`gram_check` over a stack of generator matrices (B x k x N)."""
    Gs = np.asarray(Gs, dtype=np.int64)
    gram = field.vdot(Gs[:, :, None, :], Gs[:, None, :, :])
    return ~gram.reshape(len(Gs), -1).any(axis=1)


def rref(field: FieldSpec, G) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting, and the pivot columns."""
    M = np.array(G, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise VerifyError("generator matrix must be two-dimensional")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if not len(nz):
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = field.vmul(M[r], field.inv(int(M[r, c])))
        factors = M[:, c].copy()
        factors[r] = 0
        if factors.any():
            M = field.vsub(M, field.vmul(factors[:, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M, pivots


def rank_and_dual_dim(field: FieldSpec, G) -> tuple[int, int]:
    G = np.asarray(G, dtype=np.int64)
    if G.size == 0:
        return 0, G.shape[1] if G.ndim == 2 else 0
    _, piv = rref(field, G)
    return len(piv), G.shape[1] - len(piv)


def batch_nonsingular(field: FieldSpec, mats: np.ndarray) -> np.ndarray:
    """Whether each square matrix in a B x j x j stack is invertible."""
    M = np.array(mats, dtype=np.int64, copy=True)
    B, j, _ = M.shape
    ok = np.ones(B, dtype=bool)
    rows = np.arange(B)
    for c in range(j):
        nz = M[:, c:, c] != 0
        ok &= nz.any(axis=1)
        piv = c + nz.argmax(axis=1)
        top = M[rows, c].copy()
        M[rows, c] = M[rows, piv]
        M[rows, piv] = top
        if c + 1 == j:
            break
        pv = M[:, c, c]
        inv = field.vinv(np.where(pv == 0, 1, pv))
        factor = field.vmul(M[:, c + 1 :, c], inv[:, None])
        M[:, c + 1 :, c:] = field.vsub(
            M[:, c + 1 :, c:], field.vmul(factor[:, :, None], M[:, None, c, c:])
        )
    return ok


def _minor_blocks(A: np.ndarray, subsets: np.ndarray, k: int):
    """Split k-subsets by how many columns fall outside the information set.

    For ``G = [I | A]``, columns ``S`` are independent iff the square block of
    ``A`` on rows ``{0..k-1} \\ S`` and columns ``S \\ {0..k-1}`` is invertible.
    Yields ``(positions, blocks)`` per block size.
    """
    outside = (subsets >= k).sum(axis=1)
    for j in np.unique(outside):
        pos = np.nonzero(outside == j)[0]
        if j == 0:
            yield pos, None
            continue
        sub = subsets[pos]
        inside = np.zeros((len(pos), k), dtype=bool)
        head = sub[:, : k - j]
        np.put_along_axis(inside, head, True, axis=1)
        missing = np.argsort(inside, axis=1, kind="stable")[:, :j]
        cols = sub[:, k - j :] - k
        yield pos, A[missing[:, :, None], cols[:, None, :]]


def _independent(field: FieldSpec, A: np.ndarray, subsets: np.ndarray, k: int) -> np.ndarray:
    ok = np.ones(len(subsets), dtype=bool)
    for pos, blocks in _minor_blocks(A, subsets, k):
        if blocks is None:
            continue
        for s in range(0, len(pos), _BATCH):
            ok[pos[s : s + _BATCH]] = batch_nonsingular(field, blocks[s : s + _BATCH])
    return ok


@dataclass
class MdsResult:
    status: str  # proved | sampled-consistent | disproved | skipped
    witness: tuple[int, ...] | None = None
    checked: int = 0


def mds_check(field: FieldSpec, G, mode: str = "exhaustive", samples: int = 10_000, seed: int = 0) -> MdsResult:
    """Decide whether every ``k`` columns of ``G`` are linearly independent.

    That is the MDS property ``d = N - k + 1`` for a rank-``k`` generator.
    ``mode`` is ``"exhaustive"``, ``"sampled"`` (``samples`` uniform random
    subsets) or ``"skip"``.  A reported witness is the lexicographically
    smallest dependent subset among those examined.
    """
    if mode == "skip":
        return MdsResult("skipped")
    G = np.asarray(G, dtype=np.int64)
    k, N = G.shape
    if mode == "exhaustive":
        total = math.comb(N, k)
        if total > EXHAUSTIVE_BUDGET:
            raise VerifyError(f"C({N},{k}) = {total} subsets exceeds the exhaustive budget {EXHAUSTIVE_BUDGET}")
    elif mode != "sampled":
        raise VerifyError(f"unknown MDS mode {mode!r}")
    R, piv = rref(field, G)
    first = tuple(range(k))
    if piv[:k] != list(first):
        # rank deficiency or dependent leading columns
        return MdsResult("disproved", first, 1)
    A = R[:, k:]
    if mode == "exhaustive":
        checked = 0
        it = itertools.combinations(range(N), k)
        while True:
            chunk = np.array(list(itertools.islice(it, 200_000)), dtype=np.int64)
            if not len(chunk):
                break
            ok = _independent(field, A, chunk.reshape(-1, k), k)
            checked += len(chunk)
            if not ok.all():
                bad = int(np.argmin(ok))
                return MdsResult("disproved", tuple(int(x) for x in chunk[bad]), checked)
        return MdsResult("proved", None, checked)
    rng = np.random.default_rng(seed)
    subsets = np.sort(np.argsort(rng.random((samples, N)), axis=1)[:, :k], axis=1)
    ok = _independent(field, A, subsets, k)
    if not ok.all():
        bad = sorted(tuple(int(x) for x in s) for s in subsets[~ok])
        return MdsResult("disproved", bad[0], samples)
    return MdsResult("sampled-consistent", None, samples)


@dataclass
class VerifyReport:
    k: int
    length: int
    gram_zero: bool
    rank: int
    dual_dim: int
    self_orthogonal: bool
    self_dual: bool
    almost_self_dual: bool
    mds: str
    mds_witness: tuple[int, ...] | None = None
    mds_checked: int = 0

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["mds_witness"] = list(self.mds_witness) if self.mds_witness is not None else None
        return d


def auto_mds_mode(N: int, k: int) -> str:
    return "exhaustive" if math.comb(N, k) <= EXHAUSTIVE_BUDGET else "sampled"


def report_matrix(field: FieldSpec, G, k: int | None = None, mds_mode: str = "auto",
                  samples: int = 10_000, seed: int = 0) -> VerifyReport:
    """Verify a generator matrix claimed to span a ``k``-dimensional code."""
    G = np.asarray(G, dtype=np.int64)
    kk = G.shape[0] if k is None else k
    N = G.shape[1]
    gz = gram_check(field, G)
    rank, dual = rank_and_dual_dim(field, G)
    so = gz and rank == kk
    if mds_mode == "auto":
        mds_mode = auto_mds_mode(N, kk)
    mds = mds_check(field, G, mds_mode, samples, seed)
    return VerifyReport(
        k=kk,
        length=N,
        gram_zero=gz,
        rank=rank,
        dual_dim=dual,
        self_orthogonal=so,
        self_dual=so and dual == kk,
        almost_self_dual=so and dual == kk + 1,
        mds=mds.status,
        mds_witness=mds.witness,
        mds_checked=mds.checked,
    )


def full_report(code: GrsCode, mds_mode: str = "auto", samples: int = 10_000, seed: int = 0) -> VerifyReport:
    return report_matrix(code.field, generator_matrix(code), code.k, mds_mode, samples, seed)
