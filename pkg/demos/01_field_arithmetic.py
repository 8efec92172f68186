"""Finite-field arithmetic with canonical encodings.

Elements of GF(p^m) are integers c = c_0 + c_1 p + ... + c_{m-1} p^(m-1), the
digits being the coefficients of a polynomial reduced modulo the smallest
monic irreducible. The primitive element g is the smallest encoding of order
q - 1.
"""

import numpy as np

from grsdual import make_field

F = make_field(3, 2)
print(f"GF(9): modulus coefficients {F.modulus} (constant first), g = {F.g}")

x = 3  # the encoding of the polynomial x
print(f"x * x = {F.mul(x, x)}   (x^2 = -1 = 2)")
print(f"dlog(2) = {F.dlog(2)}   (g^4 = -1)")

print("powers of g:", " ".join(F.describe(F.gpow(e)) for e in range(8)))

squares = sorted({F.mul(e, e) for e in range(1, 9)})
print(f"nonzero squares: {squares}; sqrt picks the smaller root, e.g. sqrt(2) = {F.sqrt(2)}")

# the same operations work on whole arrays
a = np.arange(9)
print("a * g elementwise:", F.vmul(a, np.full(9, F.g)).tolist())
