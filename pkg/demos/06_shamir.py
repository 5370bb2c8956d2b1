# With one secret symbol and nu - mu = 1 the scheme is Shamir's threshold sharing:
# share j is p(alpha^j) for p(x) = S + e1 x + e2 x^2.
#
# Run:  python3 demos/06_shamir.py

import itertools

import numpy as np

from eewt import Observation, decode, encode, equivocation_bruteforce, eval_scheme, field_new

f = field_new(2, 3, 0xB)
scheme = eval_scheme(f, n=7, nu=3, mu=2)
print(scheme)

S, E = 6, np.array([1, 4])
shares = encode(scheme, [S], E)


def p(x):
    return f.add(S, f.add(f.mul(E[0], x), f.mul(E[1], f.mul(x, x))))


print("shares      ", shares.tolist())
print("p(alpha^j)  ", [int(p(f.alpha_pow(j))) for j in range(7)])

# any three shares give S back
for m in list(itertools.combinations(range(7), 3))[:4]:
    print(m, "->", decode(scheme, Observation.of(shares, m)))

# two shares: all 8 secrets remain equally likely
print("candidates given shares 0, 5:", equivocation_bruteforce(scheme, [0, 5]).raw_count)
