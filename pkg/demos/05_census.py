"""Exhaustive check that the certificate criterion is an exact characterization.

Over a tiny field every point set and every scaling vector is tried; the Gram
test and the certificate test must agree on every one of them.
"""

from grsdual import make_field
from grsdual.census import run_census

F = make_field(5)
for n, k, ext in [(3, 1, False), (4, 1, False), (4, 2, False), (5, 2, False),
                  (3, 2, True), (4, 2, True)]:
    res = run_census(F, n, k, ext)
    tag = "extended" if ext else "plain"
    print(f"GF(5) n={n} k={k} {tag:<8}: {res.scalings:>6} scalings, "
          f"{res.self_orthogonal:>4} self-orthogonal, agreement {100 * res.agreement:.1f}%, "
          f"certificate shape ok {res.certificate_shape_ok}/{res.self_orthogonal}")
