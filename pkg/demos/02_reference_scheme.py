# The n = 7 nested scheme over GF(8): any 5 symbols recover the 2-symbol secret,
# any 3 symbols reveal nothing about it.
#
# Run:  python3 demos/02_reference_scheme.py

import itertools

import numpy as np

from eewt import (
    ErasureChannel,
    ErasureChannelSpec,
    Observation,
    decode,
    encode_random,
    equivocation_bruteforce,
    equivocation_formula,
    reference_scheme,
    verify_reliability,
    verify_security,
)
from eewt.errors import AmbiguousSecret

scheme = reference_scheme()
print(scheme)
print("G  =\n", scheme.G)
print("G* =\n", scheme.G_star)

secret = np.array([3, 5])
x, E = encode_random(scheme, secret, seed=1)
print("secret", secret, "randomizer", E, "codeword", x)

# the legitimate receiver sees 5 random positions
bob = ErasureChannel(ErasureChannelSpec(7, 5, seed=10))
obs = bob.transmit(x)
print("receiver sees", obs.j, "->", decode(scheme, obs))

# the eavesdropper sees 3; every secret is equally likely given its view
eve = ErasureChannel(ErasureChannelSpec(7, 3, seed=11)).transmit(x)
print("eavesdropper sees", eve.j, "equivocation", equivocation_formula(scheme, eve.j).dims, "symbols")

# brute force over all 8^5 (S, E) pairs agrees with the rank formula
for w in list(itertools.combinations(range(7), 3))[:5]:
    b = equivocation_bruteforce(scheme, w)
    print(w, "candidate secrets:", b.raw_count)

# four symbols are not enough to decode
try:
    decode(scheme, Observation.of(x, [0, 1, 2, 3]))
except AmbiguousSecret as exc:
    print("4 symbols:", exc)

print(verify_security(scheme).to_text())
print(verify_reliability(scheme).to_text())
