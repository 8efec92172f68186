"""When is a GRS code self-orthogonal?

GRS_k(a, v) (k <= n/2) is self-orthogonal exactly when v_i^2 = lam(a_i) / L(a_i)
for a nonzero polynomial lam of degree at most n - 2k, where
L(a_i) = prod_{j != i} (a_i - a_j). Here we turn a certificate into a scaling
vector, search for certificates, and confirm each result with the Gram test.
"""

from grsdual import EvalPoints, GrsCode, LambdaPoly, full_report, make_field
from grsdual.ortho import NonResidueError, scaling_from_lambda, search_lambda, selfdual_extended

F = make_field(5)
pts = EvalPoints(F, (0, 1, 2, 3))

lam = LambdaPoly((4, 2, 1))  # x^2 + 2x + 4
v = scaling_from_lambda(pts, 1, lam)
rep = full_report(GrsCode(pts, v, 1))
print(f"lambda = x^2+2x+4 gives v = {v}; self-orthogonal: {rep.self_orthogonal}")

try:
    scaling_from_lambda(pts, 2, LambdaPoly.constant(1))
except NonResidueError as exc:
    print(f"lambda = 1 with k = 2 fails at point {exc.index}: {exc}")

found = search_lambda(pts, 1)
print(f"first certificate in search order: coefficients {found.coeffs}")
print(f"k = 2 (self-dual) certificate: {search_lambda(pts, 2)}")

# an extended code is self-dual when -1/L(a_i) is a square for every i
v = selfdual_extended(EvalPoints(F, (1,)))
code = GrsCode(EvalPoints(F, (1,)), v, 1, extended=True)
print(f"extended [2,1] code with v = {v}: self-dual {full_report(code).self_dual}")
