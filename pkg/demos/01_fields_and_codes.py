# Finite fields, Reed-Solomon codes and dimension/length profiles.
#
# Run:  python3 demos/01_fields_and_codes.py

import numpy as np

from eewt import dlp, field_new, is_mds, linear_code, primitive_element, rs_cyclic_code, rs_eval_code
from eewt.codes import default_points, dlp_profile

# GF(8) built from x^3 + x + 1.  Elements are ints whose bits are polynomial coefficients.
f = field_new(2, 3, 0xB)
a = primitive_element(f)
print("GF(8) primitive element:", a)
print("powers of alpha:", [f.alpha_pow(i) for i in range(7)])
print("alpha * alpha^2 =", f.mul(2, 4), "(alpha^3 = x + 1 = 0b011)")

# arithmetic is vectorized over numpy arrays
x = np.arange(1, 8)
print("x * x^-1 =", f.mul(x, f.inv(x)))

# A (7, 3) evaluation-form RS code on the points alpha^0..alpha^6
code = rs_eval_code(f, default_points(f, 7), 0, 3, name="RS(7,3)")
print(code)
print(code.generator.data)
print("MDS:", is_mds(code))

# k_i(C): the largest subcode supported on i coordinates.  For an MDS code this is max(0, i - n + k).
print("DLP:", dlp_profile(code))
print("k_5 =", dlp(code, 5))

# A non-MDS code picks up dimension at smaller supports
gf2 = field_new(2, 1)
bad = linear_code(gf2, [[1, 0, 1, 0], [0, 1, 0, 1]])
print("binary (4,2): MDS", is_mds(bad), "DLP", dlp_profile(bad))

# cyclic RS over GF(256): generator polynomial with roots alpha^1..alpha^55
gf256 = field_new(2, 8, 0x11D)
D, g = rs_cyclic_code(gf256, 200)
print(D, "generator degree", g.degree)
