# The GF(256) design point: n = 255, nu = 200, mu = 150, secret rate 50/255.
#
# Run:  python3 demos/04_rs255_design_point.py

import time

import numpy as np

from eewt import Mode, Observation, decode, encode_random, field_new, verify_security
from eewt.schemes import cyclic_scheme
from eewt.wiretap import format_capacity

f = field_new(2, 8, 0x11D)
t0 = time.perf_counter()
scheme, g_D, g_star = cyclic_scheme(f, nu=200, mu=150)
print(f"built in {time.perf_counter() - t0:.2f}s:", scheme)
print("deg g_D =", g_D.degree, " deg g_C* =", g_star.degree, " g_D | g_C*:", g_D.divides(g_star))
print("secrecy capacity", format_capacity(255, 200, 150), "=", round(50 / 255, 3))

# roots of g_D are exactly alpha^1..alpha^55
roots = [e for e in range(255) if g_D(f.alpha_pow(e)) == 0]
print("roots of g_D: alpha^%d..alpha^%d (%d of them)" % (roots[0], roots[-1], len(roots)))

rng = np.random.default_rng(0)
secret = rng.integers(0, 256, size=scheme.k)
x, _ = encode_random(scheme, secret, rng)
m = rng.choice(255, size=200, replace=False)
print("decoded from 200 random symbols:", np.array_equal(decode(scheme, Observation.of(x, m)), secret))

# C(255, 150) subsets cannot be enumerated; sample instead
print(verify_security(scheme, Mode.parse("sampled:20", seed=1)).to_text())
