import pytest

from grsdual.construct import (
    ConstructionContradiction,
    CosetPlan,
    KINDS,
    ParameterError,
    PointCoord,
    assemble_points,
    build,
    build_almost_selfdual,
    build_selfdual,
    build_selforthogonal,
    check_closed_forms,
    closed_form_l,
    enumerate_lengths,
    expected_selfdual_count,
    make_plan,
    odd_square_root,
    u_congruence_holds,
    u_factor,
    valid_st,
)
from grsdual.gf import field_of_order
from grsdual.grs import l_value, l_values
from grsdual.verify import full_report

DESK_Q = [9, 25, 49, 81, 121, 169]


def all_plans(qs=DESK_Q):
    for q in qs:
        F = field_of_order(q)
        r = odd_square_root(q)
        for kind in KINDS:
            for s, t in valid_st(r, kind):
                yield make_plan(F, s, t, kind)


def test_odd_square_root():
    assert odd_square_root(9) == 3 and odd_square_root(22201) == 149
    for bad in (8, 10, 4, 27, 15 * 15):
        with pytest.raises(ParameterError):
            odd_square_root(bad)


def test_assemble_examples():
    F = field_of_order(9)
    plan = make_plan(F, 1, 1, "selfdual")
    assert plan.case == "thm1-ii" and plan.n == 6
    pts = assemble_points(plan)
    assert pts.a == tuple(F.gpow(e) for e in (0, 2, 4, 6, 1, 5))

    plan = make_plan(F, 2, 1, "almost")
    assert plan.case == "thm3-ii"
    pts = assemble_points(plan)
    assert pts.n == 9 and set(pts.a) == set(range(9)) and pts.a[-1] == 0

    F25 = field_of_order(25)
    plan = make_plan(F25, 2, 1, "selfdual")
    assert plan.case == "thm1-i" and assemble_points(plan).n == 14 == 2 * 4 + 1 * 6


def test_assemble_matches_coset_expansion():
    # expand each coset from its generator by repeated multiplication
    for plan in all_plans([25, 49, 81]):
        F, r = plan.field, plan.r
        A, B, G = plan.alpha, plan.beta, plan.gamma
        assert F.pow(A, r - 1) == 1 and F.pow(B, r + 1) == 1
        assert len({F.pow(A, j) for j in range(r - 1)}) == r - 1
        assert len({F.pow(B, j) for j in range(r + 1)}) == r + 1

        def coset(shift, gen, order):
            out, x = [], shift
            for _ in range(order):
                out.append(x)
                x = F.mul(x, gen)
            return out

        want = []
        if plan.one_mod_four:
            for i in range(plan.s):
                want += coset(F.pow(B, i), A, r - 1)
            for i in range(plan.t):
                want += coset(F.pow(G, 2 * i + 1), B, r + 1)
        else:
            for i in range(plan.t):
                want += coset(F.pow(A, i), B, r + 1)
            for i in range(plan.s):
                want += coset(F.pow(G, 2 * i + 1), A, r - 1)
        if plan.has_zero:
            want.append(0)
        assert list(assemble_points(plan).a) == want
        assert len(set(want)) == plan.n


def test_plan_invariants():
    F = field_of_order(9)
    with pytest.raises(ParameterError, match="s is odd"):
        CosetPlan(F, 3, 2, 1, "thm1-ii")
    with pytest.raises(ParameterError, match="s is even"):
        CosetPlan(F, 3, 1, 1, "thm3-ii")
    with pytest.raises(ParameterError):
        CosetPlan(F, 3, 3, 1, "thm2-case2")  # s > (r+1)/2
    with pytest.raises(ParameterError):
        CosetPlan(F, 3, 1, 2, "thm2-case2")  # t > (r-1)/2
    with pytest.raises(ParameterError):
        CosetPlan(F, 5, 2, 1, "thm1-i")  # q != r^2
    plan = CosetPlan(F, 3, 1, 1, "thm2-case2")
    with pytest.raises(ParameterError):
        closed_form_l(plan, PointCoord("plain", 1, 0))
    with pytest.raises(ParameterError):
        closed_form_l(plan, PointCoord("zero"))
    with pytest.raises(ParameterError):
        closed_form_l(plan, PointCoord("other"))


def test_closed_form_first_point_q9():
    F = field_of_order(9)
    plan = make_plan(F, 1, 1, "selfdual")
    pts = assemble_points(plan)
    c = PointCoord("plain", 0, 0)
    u, _ = u_factor(plan, c)
    G = plan.gamma
    assert u == F.sub(1, F.pow(G, plan.r - 1))
    assert closed_form_l(plan, c) == l_value(pts, 0)


def test_zero_point_formulas():
    for plan in all_plans():
        if plan.has_zero:
            pts = assemble_points(plan)
            assert closed_form_l(plan, PointCoord("zero")) == l_value(pts, plan.n - 1)


@pytest.mark.parametrize("q", DESK_Q)
def test_closed_forms_match_direct_products(q):
    count = 0
    for plan in all_plans([q]):
        assert check_closed_forms(plan) == []
        count += 1
    assert count > 0


@pytest.mark.parametrize("q", DESK_Q)
def test_u_congruences(q):
    for plan in all_plans([q]):
        for c in plan.coordinates():
            if c.block == "zero":
                continue
            u, E = u_factor(plan, c)
            assert u_congruence_holds(plan, c)
            # the parity claim follows from the congruence since r + 1 is even
            assert plan.field.dlog(u) % 2 == E % 2


def test_cross_factor_needed_in_shifted_block_with_zero():
    # r = 3 mod 4 with 0 appended: L at gamma^(2i+1) alpha^j needs the product
    # over the beta-cosets as well as u; leaving it out gives the wrong value
    wrong = 0
    for q in (9, 49, 121):
        F = field_of_order(q)
        r = odd_square_root(q)
        for s, t in valid_st(r, "almost"):
            plan = make_plan(F, s, t, "almost")
            pts = assemble_points(plan)
            A = plan.alpha
            for idx, c in enumerate(plan.coordinates()):
                if c.block != "shifted":
                    continue
                cross = 1
                for h in range(t):
                    cross = F.mul(cross, F.sub(F.neg(F.pow(A, c.j * (r + 1))), F.pow(A, h * (r + 1))))
                full = closed_form_l(plan, c)
                assert full == l_value(pts, idx)
                if F.div(full, cross) != full:
                    wrong += 1
    assert wrong > 0


def test_build_examples():
    c = build_selfdual(9, 1, 1)
    assert (c.length, c.k) == (6, 3)
    c = build_selfdual(25, 2, 1)
    assert (c.length, c.k) == (14, 7)
    with pytest.raises(ParameterError, match="s is odd"):
        build_selfdual(9, 2, 1)

    for k in (1, 2):
        c = build_selforthogonal(9, 1, 1, k)
        assert (c.length, c.k) == (6, k)
    with pytest.raises(ParameterError):
        build_selforthogonal(9, 1, 1, 3)
    with pytest.raises(ParameterError):
        build_selforthogonal(9, 1, 1, 0)

    c = build_almost_selfdual(9, 2, 1)
    assert (c.length, c.k) == (9, 4) and set(c.points.a) == set(range(9))
    c = build_almost_selfdual(25, 1, 1)
    assert (c.length, c.k) == (11, 5)
    with pytest.raises(ParameterError, match="s is even"):
        build_almost_selfdual(9, 1, 1)

    with pytest.raises(ParameterError):
        build(9, "nonsense", 1, 1)
    with pytest.raises(ParameterError):
        build(9, "selforthogonal", 1, 1)


def test_build_reports_q9():
    rep = full_report(build_selfdual(9, 1, 1), "exhaustive")
    assert rep.gram_zero and rep.rank == 3 and rep.dual_dim == 3 and rep.self_dual and rep.mds == "proved"
    rep = full_report(build_selforthogonal(9, 1, 1, 2), "exhaustive")
    assert rep.self_orthogonal and not rep.self_dual and rep.dual_dim == 4
    rep = full_report(build_almost_selfdual(9, 2, 1), "exhaustive")
    assert rep.almost_self_dual and rep.mds == "proved"


def test_certificates_are_residues():
    # recompute the residue conditions independently of the builders
    for plan in all_plans([9, 25, 49]):
        F = field_of_order(plan.field.q)
        pts = assemble_points(plan)
        Ls = l_values(pts)
        if plan.case.startswith("thm1"):
            assert all(F.is_qr(F.div(plan.gamma, L)) for L in Ls)
        elif plan.case.startswith("thm3"):
            assert all(F.is_qr(F.inv(L)) for L in Ls)


def test_contradiction_error_carries_context():
    exc = ConstructionContradiction(9, 1, 1, 4, "thm1-ii", 3)
    assert (exc.q, exc.s, exc.t, exc.index) == (9, 1, 1, 4)
    assert "9" in str(exc)


def test_enumerate_examples():
    rows = enumerate_lengths(9, "selfdual")
    assert [(w.n, w.s, w.t) for w in rows] == [(6, 1, 1)]
    assert len(enumerate_lengths(22201, "selfdual")) == 2738
    assert len(enumerate_lengths(22801, "selfdual")) == 2850
    with pytest.raises(ParameterError):
        enumerate_lengths(27, "selfdual")


@pytest.mark.parametrize("q", [9, 25, 49, 81, 121, 169, 289, 361, 529, 625])
def test_enumerate_properties(q):
    r = odd_square_root(q)
    sd = enumerate_lengths(q, "selfdual")
    assert len(sd) == expected_selfdual_count(r)
    if r % 4 == 1:
        assert len(sd) == (r - 1) // 4 * (r - 1) // 2
    else:
        assert len(sd) == (r + 1) // 4 * (r - 1) // 2
    assert all(w.n % 2 == 0 for w in sd)
    alm = enumerate_lengths(q, "almost")
    assert all(w.n % 2 == 1 for w in alm)
    so = enumerate_lengths(q, "selforthogonal")
    assert len(so) == (r + 1) // 2 * (r - 1) // 2
    for rows in (sd, alm, so):
        ns = [w.n for w in rows]
        assert ns == sorted(set(ns))
        for w in rows:
            extra = 1 if rows is alm else 0
            assert w.n == w.s * (r - 1) + w.t * (r + 1) + extra
