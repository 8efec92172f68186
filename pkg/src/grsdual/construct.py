"""Explicit MDS self-dual, self-orthogonal and almost self-dual GRS codes over GF(r^2).

Let ``g`` generate GF(r^2)^*, ``alpha = g^(r+1)`` (order r-1, generating
GF(r)^*) and ``beta = g^(r-1)`` (order r+1).  The evaluation sets are unions of
multiplicative cosets of ``<alpha>`` and ``<beta>``, the second family shifted
by odd powers of a non-square ``gamma``:

* r = 1 (mod 4), ``gamma = g^((r+1)/2)``::

      <alpha>, beta<alpha>, ..., beta^(s-1)<alpha>,
      gamma<beta>, gamma^3<beta>, ..., gamma^(2t-1)<beta>

* r = 3 (mod 4), ``gamma = g^((r-1)/2)``::

      <beta>, alpha<beta>, ..., alpha^(t-1)<beta>,
      gamma<alpha>, gamma^3<alpha>, ..., gamma^(2s-1)<alpha>

giving ``n = s(r-1) + t(r+1)`` points; the almost self-dual family appends 0.
Inside a coset ``x<alpha>`` points are listed as ``x, x*alpha, x*alpha^2, ...``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import FieldSpec, field_of_order, prime_power
from .grs import EvalPoints, GrsCode, l_value
from .ortho import CriterionError, LambdaPoly, scaling_from_lambda

CASES = ("thm1-i", "thm1-ii", "thm2-case1", "thm2-case2", "thm3-i", "thm3-ii")
KINDS = ("selfdual", "selforthogonal", "almost")


class ParameterError(ValueError):
    """Construction parameters outside the range where the construction applies."""


class ConstructionContradiction(RuntimeError):
    """A point's required square turned out to be a non-residue.

    The constructions are proved to avoid this; raising it means either an
    implementation bug or a flaw in the argument, so it carries the full
    parameter set for reproduction.
    """

    def __init__(self, q: int, s: int, t: int, index: int, case: str, k: int | None = None):
        self.q, self.s, self.t, self.index, self.case, self.k = q, s, t, index, case, k
        super().__init__(
            f"{case}: lambda(a_i)/L(a_i) is not a nonzero square at index {index} "
            f"(q={q}, s={s}, t={t}" + (f", k={k})" if k is not None else ")")
        )


def odd_square_root(q: int) -> int:
    """``r`` with ``q = r^2`` and ``r`` an odd prime power; raises otherwise."""
    r = math.isqrt(q)
    pm = prime_power(r) if r * r == q else None
    if pm is None or pm[0] == 2:
        raise ParameterError(f"q={q} is not the square of an odd prime power")
    return r


def case_for(kind: str, r: int) -> str:
    one = r % 4 == 1
    if kind == "selfdual":
        return "thm1-i" if one else "thm1-ii"
    if kind == "selforthogonal":
        return "thm2-case1" if one else "thm2-case2"
    if kind == "almost":
        return "thm3-i" if one else "thm3-ii"
    raise ParameterError(f"unknown kind {kind!r}; expected one of {KINDS}")


def kind_of(case: str) -> str:
    return {"thm1": "selfdual", "thm2": "selforthogonal", "thm3": "almost"}[case.split("-")[0]]


def _parity_condition(case: str) -> tuple[int, int, str] | None:
    """``(r mod 4, required s mod 2, wording)`` for cases with an s-parity condition."""
    return {
        "thm1-i": (1, 0, "r ≡ 1 (mod 4) and s is even"),
        "thm1-ii": (3, 1, "r ≡ 3 (mod 4) and s is odd"),
        "thm3-i": (1, 1, "r ≡ 1 (mod 4) and s is odd"),
        "thm3-ii": (3, 0, "r ≡ 3 (mod 4) and s is even"),
    }.get(case)


def check_case(case: str, r: int, s: int, t: int) -> None:
    if case not in CASES:
        raise ParameterError(f"unknown case {case!r}")
    if not 1 <= s <= (r + 1) // 2:
        raise ParameterError(f"s={s} outside 1..(r+1)/2 = {(r + 1) // 2}")
    if not 1 <= t <= (r - 1) // 2:
        raise ParameterError(f"t={t} outside 1..(r-1)/2 = {(r - 1) // 2}")
    cond = _parity_condition(case)
    if cond is not None:
        rmod, spar, words = cond
        if r % 4 != rmod or s % 2 != spar:
            raise ParameterError(f"{kind_of(case)} construction requires {words} (got r={r}, s={s})")
    elif case == "thm2-case1" and r % 4 != 1:
        raise ParameterError("thm2-case1 requires r ≡ 1 (mod 4)")
    elif case == "thm2-case2" and r % 4 != 3:
        raise ParameterError("thm2-case2 requires r ≡ 3 (mod 4)")


@dataclass(frozen=True)
class PointCoord:
    """Position of an evaluation point inside a plan.

    ``block`` is ``"plain"`` for the unshifted cosets (``beta^i alpha^j`` when
    r = 1 mod 4, ``alpha^i beta^j`` when r = 3 mod 4), ``"shifted"`` for
    ``gamma^(2i+1) beta^j`` / ``gamma^(2i+1) alpha^j``, and ``"zero"`` for the
    appended 0.
    """

    block: str
    i: int = 0
    j: int = 0


@dataclass(frozen=True)
class CosetPlan:
    field: FieldSpec
    r: int
    s: int
    t: int
    case: str

    def __post_init__(self):
        if self.field.q != self.r * self.r:
            raise ParameterError(f"field order {self.field.q} is not r^2 = {self.r ** 2}")
        check_case(self.case, self.r, self.s, self.t)

    @property
    def one_mod_four(self) -> bool:
        return self.r % 4 == 1

    @property
    def has_zero(self) -> bool:
        return self.case.startswith("thm3")

    @property
    def alpha(self) -> int:
        return self.field.gpow(self.r + 1)

    @property
    def beta(self) -> int:
        return self.field.gpow(self.r - 1)

    @property
    def gamma(self) -> int:
        return self.field.gpow((self.r + 1) // 2 if self.one_mod_four else (self.r - 1) // 2)

    @property
    def n(self) -> int:
        return self.s * (self.r - 1) + self.t * (self.r + 1) + int(self.has_zero)

    def coordinates(self) -> list[PointCoord]:
        """Coordinates in evaluation-vector order."""
        r, s, t = self.r, self.s, self.t
        if self.one_mod_four:
            plain = [PointCoord("plain", i, j) for i in range(s) for j in range(r - 1)]
            shifted = [PointCoord("shifted", i, j) for i in range(t) for j in range(r + 1)]
        else:
            plain = [PointCoord("plain", i, j) for i in range(t) for j in range(r + 1)]
            shifted = [PointCoord("shifted", i, j) for i in range(s) for j in range(r - 1)]
        zero = [PointCoord("zero")] if self.has_zero else []
        return plain + shifted + zero

    def point(self, c: PointCoord) -> int:
        F, r = self.field, self.r
        self._check_coord(c)
        if c.block == "zero":
            return 0
        # exponents of g
        a_e, b_e = r + 1, r - 1
        c_e = (r + 1) // 2 if self.one_mod_four else (r - 1) // 2
        if self.one_mod_four:
            e = b_e * c.i + a_e * c.j if c.block == "plain" else c_e * (2 * c.i + 1) + b_e * c.j
        else:
            e = a_e * c.i + b_e * c.j if c.block == "plain" else c_e * (2 * c.i + 1) + a_e * c.j
        return F.gpow(e)

    def _check_coord(self, c: PointCoord) -> None:
        r, s, t = self.r, self.s, self.t
        if c.block == "zero":
            if not self.has_zero:
                raise ParameterError(f"{self.case} has no zero point")
            return
        if c.block not in ("plain", "shifted"):
            raise ParameterError(f"unknown block {c.block!r}")
        alpha_cosets = (c.block == "plain") == self.one_mod_four
        ni, nj = (s, r - 1) if alpha_cosets else (t, r + 1)
        if not (0 <= c.i < ni and 0 <= c.j < nj):
            raise ParameterError(f"coordinate {c} out of range for {self.case} with s={s}, t={t}")


def make_plan(field: FieldSpec, s: int, t: int, kind: str) -> CosetPlan:
    r = odd_square_root(field.q)
    return CosetPlan(field, r, s, t, case_for(kind, r))


def assemble_points(plan: CosetPlan) -> EvalPoints:
    a = [plan.point(c) for c in plan.coordinates()]
    if len(set(a)) != len(a):
        raise AssertionError(f"coset union for {plan} has repeated points")
    return EvalPoints(plan.field, tuple(a))


# -- closed forms for L at the coset points ---------------------------------


def _prod(F: FieldSpec, xs) -> int:
    acc = 1
    for x in xs:
        acc = F.mul(acc, x)
    return acc


def u_factor(plan: CosetPlan, c: PointCoord) -> tuple[int, int]:
    """The non-obvious factor ``u`` of a closed-form L and its predicted exponent.

    Returns ``(u, E)`` where ``u`` is the product computed directly and ``E``
    satisfies ``dlog(u) = E (mod r+1)`` according to the argument that
    ``u^(r-1) = g^(E (r-1))``.  Only ``E mod (r+1)`` (and hence its parity) is
    meaningful.
    """
    F, r, s = plan.field, plan.r, plan.s
    plan._check_coord(c)
    if c.block == "zero":
        raise ParameterError("the zero point has no u-factor")
    B, G = plan.beta, plan.gamma
    i, j = c.i, c.j
    if plan.one_mod_four and c.block == "plain":
        u = _prod(F, (F.sub(F.pow(B, -2 * i), F.pow(B, -2 * l)) for l in range(s) if l != i))
        E = (r + 1) * (s - 1) // 2 + 2 * ((s - 2) * i + s * (s - 1) // 2)
    elif plan.one_mod_four:
        u = _prod(F, (F.add(F.pow(B, -2 * j), F.pow(B, -2 * h)) for h in range(s)))
        E = 2 * (s * j + s * (s - 1) // 2)
    elif c.block == "plain":
        u = _prod(F, (F.sub(F.pow(B, j * (r - 1)), F.pow(G, (2 * h + 1) * (r - 1))) for h in range(s)))
        E = (r + 1) * s // 2 - (s * s + 2 * s * j) * (r - 1) // 2
    else:
        u = _prod(F, (F.sub(F.pow(G, (2 * i + 1) * (r - 1)), F.pow(G, (2 * l + 1) * (r - 1)))
                      for l in range(s) if l != i))
        E = (r + 1) * (s - 1) // 2 - (r - 1) // 2 * ((s - 2) * (2 * i + 1) + s * s)
    return u, E


def u_congruence_holds(plan: CosetPlan, c: PointCoord) -> bool:
    u, E = u_factor(plan, c)
    return u != 0 and (plan.field.dlog(u) - E) % (plan.r + 1) == 0


def closed_form_l(plan: CosetPlan, c: PointCoord) -> int:
    """``L(a)`` at the point with coordinates ``c``, from the factored product.

    The three-way factorization comes from splitting ``prod (a - a')`` over
    whole cosets with ``prod_h (x - y alpha^h) = x^(r-1) - y^(r-1)`` (and the
    analogue for ``beta``) plus the root-of-unity identity for the point's own
    coset.  When 0 is also a point, every L at a nonzero point gains the
    factor ``a - 0``.
    """
    F, r, s, t = plan.field, plan.r, plan.s, plan.t
    plan._check_coord(c)
    A, B, G = plan.alpha, plan.beta, plan.gamma
    rm1, rp1 = F.from_int(r - 1), F.from_int(r + 1)
    if c.block == "zero":
        if plan.one_mod_four:
            ea = (r - 2) * (r - 1) * s // 2
            eb = ((r - 1) * (s - 1) * s + r * (r + 1) * t) // 2
            eg = (r + 1) * t * t
        else:
            ea = ((r + 1) * (t - 1) * t + (r - 2) * (r - 1) * s) // 2
            eb = r * (r + 1) * t // 2
            eg = (r - 1) * s * s
        return _prod(F, (F.pow(A, ea), F.pow(B, eb), F.pow(G, eg)))
    u, _ = u_factor(plan, c)
    i, j = c.i, c.j
    z = plan.has_zero
    if plan.one_mod_four and c.block == "plain":
        cross = _prod(F, (F.sub(F.pow(A, j * (r + 1)), F.pow(G, (2 * l + 1) * (r + 1))) for l in range(t)))
        head = F.pow(B, i * (r - 1)) if z else F.mul(F.pow(B, i * (r - 2)), F.pow(A, -j))
        return _prod(F, (head, rm1, u, cross))
    if plan.one_mod_four:
        same = _prod(F, (F.sub(F.pow(G, (2 * i + 1) * (r + 1)), F.pow(G, (2 * l + 1) * (r + 1)))
                         for l in range(t) if l != i))
        sign = F.from_int((-1) ** s)
        head = F.pow(G, (r + 1) * (2 * i + 1)) if z else F.mul(F.pow(G, r * (2 * i + 1)), F.pow(B, -j))
        return _prod(F, (head, rp1, same, sign, u))
    if c.block == "plain":
        same = _prod(F, (F.sub(F.pow(A, i * (r + 1)), F.pow(A, l * (r + 1))) for l in range(t) if l != i))
        head = F.pow(A, i * (r + 1)) if z else F.mul(F.pow(A, i * r), F.pow(B, -j))
        return _prod(F, (head, rp1, same, u))
    cross = _prod(F, (F.sub(F.neg(F.pow(A, j * (r + 1))), F.pow(A, h * (r + 1))) for h in range(t)))
    head = F.pow(G, (r - 1) * (2 * i + 1)) if z else F.mul(F.pow(G, (r - 2) * (2 * i + 1)), F.pow(A, -j))
    return _prod(F, (head, rm1, u, cross))


def check_closed_forms(plan: CosetPlan) -> list[PointCoord]:
    """Coordinates where the closed form disagrees with the direct product (ideally none)."""
    pts = assemble_points(plan)
    return [c for idx, c in enumerate(plan.coordinates()) if closed_form_l(plan, c) != l_value(pts, idx)]


# -- constructions -----------------------------------------------------------


def _certify(plan: CosetPlan, k: int, lam: LambdaPoly) -> GrsCode:
    pts = assemble_points(plan)
    try:
        v = scaling_from_lambda(pts, k, lam)
    except CriterionError as exc:
        raise ConstructionContradiction(plan.field.q, plan.s, plan.t, exc.index, plan.case, k) from exc
    return GrsCode(pts, v, k)


def _field(field_or_q) -> FieldSpec:
    return field_or_q if isinstance(field_or_q, FieldSpec) else field_of_order(int(field_or_q))


def build_selfdual(field, s: int, t: int) -> GrsCode:
    """``[n, n/2]`` MDS self-dual code certified by the constant ``gamma``."""
    plan = make_plan(_field(field), s, t, "selfdual")
    return _certify(plan, plan.n // 2, LambdaPoly.constant(plan.gamma))


def selforthogonal_lambda(plan: CosetPlan) -> LambdaPoly:
    """``gamma`` when s has the self-dual parity for this r, otherwise ``x``."""
    selfdual_parity = 0 if plan.one_mod_four else 1
    if plan.s % 2 == selfdual_parity:
        return LambdaPoly.constant(plan.gamma)
    return LambdaPoly((0, 1))


def build_selforthogonal(field, s: int, t: int, k: int) -> GrsCode:
    """``[n, k]`` MDS self-orthogonal code for any ``1 <= k <= n/2 - 1``."""
    plan = make_plan(_field(field), s, t, "selforthogonal")
    if not 1 <= k <= plan.n // 2 - 1:
        raise ParameterError(f"k={k} outside 1..n/2 - 1 = {plan.n // 2 - 1}")
    return _certify(plan, k, selforthogonal_lambda(plan))


def build_almost_selfdual(field, s: int, t: int) -> GrsCode:
    """``[n, (n-1)/2]`` MDS almost self-dual code (odd n, 0 among the points)."""
    plan = make_plan(_field(field), s, t, "almost")
    return _certify(plan, (plan.n - 1) // 2, LambdaPoly.constant(1))


def build(field, kind: str, s: int, t: int, k: int | None = None) -> GrsCode:
    if kind == "selfdual":
        return build_selfdual(field, s, t)
    if kind == "selforthogonal":
        if k is None:
            raise ParameterError("the self-orthogonal construction needs k")
        return build_selforthogonal(field, s, t, k)
    if kind == "almost":
        return build_almost_selfdual(field, s, t)
    raise ParameterError(f"unknown kind {kind!r}; expected one of {KINDS}")


# -- length enumeration ------------------------------------------------------


@dataclass(frozen=True)
class LengthWitness:
    n: int
    s: int
    t: int


def valid_st(r: int, kind: str) -> list[tuple[int, int]]:
    case = case_for(kind, r)
    cond = _parity_condition(case)
    out = []
    for s in range(1, (r + 1) // 2 + 1):
        if cond is not None and s % 2 != cond[1]:
            continue
        for t in range(1, (r - 1) // 2 + 1):
            out.append((s, t))
    return out


def enumerate_lengths(field_or_q, kind: str) -> list[LengthWitness]:
    """Every achievable length for ``kind`` over GF(q), ascending, with its (s, t)."""
    q = field_or_q.q if isinstance(field_or_q, FieldSpec) else int(field_or_q)
    r = odd_square_root(q)
    extra = 1 if kind == "almost" else 0
    best: dict[int, LengthWitness] = {}
    for s, t in valid_st(r, kind):
        n = s * (r - 1) + t * (r + 1) + extra
        if n in best:
            # (s - s')(r - 1) = (t' - t)(r + 1) has no solution in range
            raise AssertionError(f"length {n} reached twice: {best[n]} and (s={s}, t={t})")
        best[n] = LengthWitness(n, s, t)
    return [best[n] for n in sorted(best)]


def expected_selfdual_count(r: int) -> int:
    """Number of (s, t) pairs the self-dual construction admits."""
    if r % 4 == 1:
        return (r - 1) // 4 * ((r - 1) // 2)
    return (r + 1) // 4 * ((r - 1) // 2)
