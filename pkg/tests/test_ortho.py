import itertools
import random

import pytest

from grsdual.construct import assemble_points, make_plan
from grsdual.gf import field_of_order, make_field
from grsdual.grs import CodeError, EvalPoints, GrsCode, generator_matrix, l_value
from grsdual.ortho import (
    BudgetError,
    LambdaPoly,
    NonResidueError,
    ZeroLambdaError,
    certified_square_vectors,
    check_budget,
    recover_lambda,
    scaling_from_lambda,
    search_lambda,
    selfdual_constant,
    selfdual_extended,
)


def naive_gram_zero(F, rows):
    for x in rows:
        for y in rows:
            acc = 0
            for a, b in zip(x, y):
                acc = F.add(acc, F.mul(a, b))
            if acc:
                return False
    return True


def code_rows(F, a, v, k, extended=False):
    rows = []
    for m in range(k):
        row = [F.mul(vi, F.pow(ai, m)) for ai, vi in zip(a, v)]
        if extended:
            row.append(1 if m == k - 1 else 0)
        rows.append(row)
    return rows


def brute_search(F, a, k, extended):
    """Scan candidate lambdas in order with scalar arithmetic; lam_0 varies fastest."""
    n = len(a)
    free = n - 2 * k + 1
    Ls = [l_value(EvalPoints(F, a), i) for i in range(n)]
    for idx in range(F.q**free):
        coeffs = [(idx // F.q**h) % F.q for h in range(free)]
        if extended:
            coeffs.append(F.neg(1))
        elif not any(coeffs):
            continue
        vals = [F.div(F.poly_eval(coeffs, x), L) for x, L in zip(a, Ls)]
        if all(F.is_qr(x) for x in vals):
            return LambdaPoly(tuple(coeffs), extended).coeffs
    return None


def test_scaling_from_lambda_examples():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    v = scaling_from_lambda(pts, 1, LambdaPoly((4, 2, 1)))
    assert v == (1, 1, 2, 2)
    assert (1 + 1 + 4 + 4) % 5 == 0

    v = scaling_from_lambda(EvalPoints(F, (1,)), 1, LambdaPoly((4,), extended=True))
    assert v == (2,)
    assert naive_gram_zero(F, [[2, 1]])

    with pytest.raises(NonResidueError) as info:
        scaling_from_lambda(pts, 2, LambdaPoly.constant(1))
    assert info.value.index == 1
    assert [F.inv(l_value(pts, i)) for i in range(4)] == [4, 3, 2, 1]


def test_scaling_zero_lambda():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    with pytest.raises(ZeroLambdaError) as info:
        scaling_from_lambda(pts, 1, LambdaPoly((4, 1)))  # x + 4 vanishes at 1
    assert info.value.index == 1


def test_lambda_validation():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    with pytest.raises(CodeError):
        scaling_from_lambda(pts, 1, LambdaPoly((1, 1, 1, 1)))  # degree 3 > n - 2k
    with pytest.raises(CodeError):
        scaling_from_lambda(pts, 1, LambdaPoly((0,)))
    with pytest.raises(CodeError):
        scaling_from_lambda(pts, 3, LambdaPoly.constant(1))
    with pytest.raises(CodeError):
        scaling_from_lambda(pts, 2, LambdaPoly((1, 1), extended=True))  # leading coeff not -1
    with pytest.raises(CodeError):
        scaling_from_lambda(pts, 1, LambdaPoly((1, 4), extended=True))  # wrong degree


def test_search_lambda_examples():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    lam = search_lambda(pts, 1)
    assert lam is not None
    assert lam.coeffs == brute_search(F, pts.a, 1, False)
    v = scaling_from_lambda(pts, 1, lam)
    assert naive_gram_zero(F, code_rows(F, pts.a, v, 1))

    ext = EvalPoints(F, (0, 1, 2))
    lam = search_lambda(ext, 1, extended=True)
    want = brute_search(F, ext.a, 1, True)
    assert (lam.coeffs if lam else None) == want
    if lam is not None:
        assert lam.degree == 2 and lam.coeffs[-1] == 4

    # n = 2k: only constants are candidates, same outcome as the constant scan
    assert (search_lambda(pts, 2) is None) == (selfdual_constant(pts) is None)


@pytest.mark.parametrize("q", [5, 7, 9])
def test_search_lambda_matches_bruteforce(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(25):
        n = rng.randint(2, min(q, 6))
        a = tuple(rng.sample(range(q), n))
        pts = EvalPoints(F, a)
        for k in range(1, n // 2 + 1):
            got = search_lambda(pts, k)
            assert (got.coeffs if got else None) == brute_search(F, a, k, False)
        for k in range(1, (n + 1) // 2 + 1):
            got = search_lambda(pts, k, extended=True)
            assert (got.coeffs if got else None) == brute_search(F, a, k, True)


def test_search_budget():
    F = field_of_order(25)
    pts = EvalPoints(F, range(20))
    with pytest.raises(BudgetError):
        search_lambda(pts, 4)
    assert check_budget(F, 20, 9) == 25**3
    assert check_budget(F, 20, 10) == 25


def test_selfdual_constant_examples():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    assert selfdual_constant(pts) is None
    # no scaling at all makes this [4,2] code self-dual
    assert not any(naive_gram_zero(F, code_rows(F, pts.a, v, 2))
                   for v in itertools.product(range(1, 5), repeat=4))

    F9 = field_of_order(9)
    plan = make_plan(F9, 1, 1, "selfdual")
    pts9 = assemble_points(plan)
    v = selfdual_constant(pts9)
    assert v is not None
    assert naive_gram_zero(F9, code_rows(F9, pts9.a, v, 3))
    assert all(F9.is_qr(F9.div(plan.gamma, l_value(pts9, i))) for i in range(6))

    with pytest.raises(CodeError):
        selfdual_constant(EvalPoints(F, (0, 1, 2)))


@pytest.mark.parametrize("q", [5, 7, 9, 13])
def test_selfdual_constant_pairs(q):
    F = field_of_order(q)
    for a in itertools.combinations(range(q), 2):
        pts = EvalPoints(F, a)
        v = selfdual_constant(pts)
        # for n=2 a constant scaling exists iff -1 is a square
        assert (v is not None) == F.is_qr(F.neg(1))
        if v is not None:
            assert naive_gram_zero(F, code_rows(F, a, v, 1))


def test_selfdual_extended_examples():
    F = make_field(5)
    assert selfdual_extended(EvalPoints(F, (1,))) == (2,)
    with pytest.raises(CodeError):
        selfdual_extended(EvalPoints(F, (1, 2)))


def test_selfdual_extended_all_triples_gf5():
    F = make_field(5)
    outcomes = {}
    for a in itertools.combinations(range(5), 3):
        pts = EvalPoints(F, a)
        v = selfdual_extended(pts)
        exists = any(naive_gram_zero(F, code_rows(F, a, w, 2, extended=True))
                     for w in itertools.product(range(1, 5), repeat=3))
        assert (v is not None) == exists, a
        if v is not None:
            assert naive_gram_zero(F, code_rows(F, a, v, 2, extended=True))
        outcomes[a] = v is not None
    assert outcomes[(0, 1, 2)] is False
    assert len(outcomes) == 10


def test_recover_lambda():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    lam = LambdaPoly((4, 2, 1))
    squares = [F.mul(x, x) for x in scaling_from_lambda(pts, 1, lam)]
    assert recover_lambda(pts, squares).coeffs == lam.coeffs

    rng = random.Random(7)
    for q in (7, 9, 25):
        F = field_of_order(q)
        for _ in range(20):
            n = rng.randint(1, min(q, 8))
            pts = EvalPoints(F, rng.sample(range(q), n))
            coeffs = tuple(rng.randrange(q) for _ in range(n))
            squares = [F.div(F.poly_eval(coeffs, x), l_value(pts, i)) for i, x in enumerate(pts.a)]
            assert recover_lambda(pts, squares).coeffs == LambdaPoly(coeffs).coeffs


def test_certified_square_vectors():
    F = make_field(5)
    pts = EvalPoints(F, (0, 1, 2, 3))
    sq = certified_square_vectors(pts, 1)
    assert (1, 1, 4, 4) in sq
    assert all(0 not in s for s in sq)


def test_scaling_deterministic_and_sound():
    rng = random.Random(11)
    for q in (7, 9, 25, 49):
        F = field_of_order(q)
        hits = 0
        for _ in range(60):
            n = rng.randint(2, min(q, 10))
            pts = EvalPoints(F, rng.sample(range(q), n))
            k = rng.randint(1, n // 2)
            deg = rng.randint(0, n - 2 * k)
            coeffs = [rng.randrange(q) for _ in range(deg)] + [rng.randrange(1, q)]
            lam = LambdaPoly(tuple(coeffs))
            try:
                v = scaling_from_lambda(pts, k, lam)
            except (NonResidueError, ZeroLambdaError):
                continue
            hits += 1
            assert v == scaling_from_lambda(pts, k, lam)
            code = GrsCode(pts, v, k)
            assert naive_gram_zero(F, generator_matrix(code).tolist())
        assert hits > 0
