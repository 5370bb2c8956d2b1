"""Nested coset coding ``X = S G + E G*`` for the erasure-erasure wiretap channel.

The message code ``C`` (generator ``G``, dimension ``k``) carries the secret
and the randomizer code ``C*`` (generator ``G*``, dimension ``k*``) carries
uniform noise.  A message selects the coset ``S G + C*``.  The legitimate
receiver sees ``nu`` of the ``n`` symbols and the eavesdropper sees ``mu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .codes import LinearCode, linear_code, shortened_dim, sum_code, trivial_intersection
from .errors import (
    AmbiguousSecret,
    BadDimensions,
    CapacityViolation,
    DataError,
    Inconsistent,
    IntersectionNotTrivial,
    InvalidParams,
    LengthMismatch,
    NoSolution,
)
from .galois import Field
from .matrix import FieldMatrix, index_set, rank_of, rref, solve_batch


@dataclass(frozen=True)
class Observation:
    """Revealed positions ``j`` (sorted) and the symbols found there."""

    j: tuple[int, ...]
    symbols: tuple[int, ...]

    def __post_init__(self):
        if len(self.j) != len(self.symbols):
            raise LengthMismatch(f"{len(self.j)} indices but {len(self.symbols)} symbols")
        if list(self.j) != sorted(set(self.j)):
            raise DataError("observation indices must be strictly increasing")

    @classmethod
    def of(cls, codeword, j: Sequence[int]) -> Observation:
        """Restriction of ``codeword`` to positions ``j``."""
        j = index_set(j, len(codeword))
        return cls(j, tuple(int(codeword[i]) for i in j))

    def to_text(self, field: Field) -> str:
        return "".join(f"{i}:{field.to_hex(v)}\n" for i, v in zip(self.j, self.symbols))

    @classmethod
    def from_text(cls, text: str) -> Observation:
        pairs = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                idx, val = line.split(":")
                pairs.append((int(idx), int(val, 16)))
            except ValueError:
                raise DataError(f"line {lineno}: expected index:hexvalue, got {line!r}") from None
        pairs.sort()
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


@dataclass(frozen=True, eq=False)
class NestedScheme:
    field: Field
    n: int
    nu: int
    mu: int
    message_code: LinearCode
    randomizer_code: LinearCode
    sum_code: LinearCode = dc_field(repr=False)

    @property
    def k(self) -> int:
        return self.message_code.k

    @property
    def k_star(self) -> int:
        return self.randomizer_code.k

    @property
    def G(self) -> np.ndarray:
        return self.message_code.generator.data

    @property
    def G_star(self) -> np.ndarray:
        return self.randomizer_code.generator.data

    @property
    def stacked(self) -> np.ndarray:
        """``[G; G*]``, i.e. the generator of the sum code."""
        return self.sum_code.generator.data

    def __repr__(self):
        return (
            f"NestedScheme(GF({self.field.q}), n={self.n}, nu={self.nu}, mu={self.mu}, "
            f"k={self.k}, k*={self.k_star})"
        )


def scheme_new(field: Field, n: int, nu: int, mu: int, C: LinearCode, C_star: LinearCode) -> NestedScheme:
    """Validate and assemble a nested scheme."""
    for name, code in (("C", C), ("C*", C_star)):
        if code.field != field:
            raise BadDimensions(f"{name} is not over {field!r}")
        if code.n != n:
            raise BadDimensions(f"{name} has length {code.n}, expected {n}")
    k, k_star = C.k, C_star.k
    if not 0 <= k <= n or not 0 <= k_star <= n - k:
        raise BadDimensions(f"need 0 <= k <= n and 0 <= k* <= n - k (k={k}, k*={k_star}, n={n})")
    if mu < 0 or mu > nu:
        raise InvalidParams(f"need 0 <= mu <= nu (mu={mu}, nu={nu}): μ > ν")
    if nu > n:
        raise InvalidParams(f"nu={nu} exceeds n={n}")
    if k > nu - mu:
        raise CapacityViolation(f"k={k} exceeds nu - mu = {nu - mu}")
    if not trivial_intersection(C, C_star):
        raise IntersectionNotTrivial("C and C* share a nonzero codeword")
    D = sum_code(C, C_star, name="D")
    return NestedScheme(field, n, nu, mu, C, C_star, D)


def capacity(n: int, nu: int, mu: int) -> Fraction:
    """Secrecy capacity ``(nu - mu) / n`` as an exact rational."""
    if mu < 0 or mu > nu or nu > n or n <= 0:
        raise InvalidParams(f"need 0 <= mu <= nu <= n (n={n}, nu={nu}, mu={mu})")
    return Fraction(nu - mu, n)


def format_capacity(n: int, nu: int, mu: int) -> str:
    """Unreduced fraction, e.g. ``50/255``."""
    capacity(n, nu, mu)
    return f"{nu - mu}/{n}"


def encode(scheme: NestedScheme, S, E) -> np.ndarray:
    """``S G + E G*``.  Accepts single vectors or batches (one per row)."""
    f = scheme.field
    S = f.check(S)
    E = f.check(E)
    if S.shape[-1:] != (scheme.k,) and not (scheme.k == 0 and S.size == 0):
        raise LengthMismatch(f"secret must have {scheme.k} symbols, got {S.shape[-1]}")
    if E.shape[-1:] != (scheme.k_star,) and not (scheme.k_star == 0 and E.size == 0):
        raise LengthMismatch(f"randomizer must have {scheme.k_star} symbols, got {E.shape[-1]}")
    batch = S.shape[:-1] if S.ndim > 1 else ()
    S = S.reshape(batch + (scheme.k,))
    E = E.reshape(batch + (scheme.k_star,))
    return scheme.sum_code.generator.vecmat(np.concatenate([S, E], axis=-1))


def draw_uniform(field: Field, rng: np.random.Generator, size) -> np.ndarray:
    """Uniform field symbols from ``rng`` (PCG64 via ``default_rng``)."""
    return rng.integers(0, field.q, size=size, dtype=np.int64)


def encode_random(scheme: NestedScheme, S, seed) -> tuple[np.ndarray, np.ndarray]:
    """Encode with a randomizer drawn from ``numpy.random.default_rng(seed)``.

    ``seed`` may also be an existing ``Generator``, which is advanced.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    E = draw_uniform(scheme.field, rng, scheme.k_star)
    return encode(scheme, S, E), E


def secret_gap(scheme: NestedScheme, j: Sequence[int]) -> int:
    """``dim D`` minus ``dim C*`` after shortening on ``j``."""
    return shortened_dim(scheme.sum_code, j) - shortened_dim(scheme.randomizer_code, j)


def _prepare(scheme: NestedScheme, j):
    j = index_set(j, scheme.n)
    a = FieldMatrix(scheme.field, scheme.stacked[:, list(j)].reshape(scheme.k + scheme.k_star, len(j)))
    return j, a


def decode(scheme: NestedScheme, obs: Observation) -> np.ndarray:
    """Recover ``S`` from an observation.

    Raises :class:`~eewt.errors.Inconsistent` if no codeword matches and
    :class:`~eewt.errors.AmbiguousSecret` (with ``.gap``) if several secrets do.
    """
    return decode_blocks(scheme, obs.j, [obs.symbols])[0]


def decode_blocks(scheme: NestedScheme, j: Sequence[int], symbols) -> np.ndarray:
    """Decode many observations sharing the index set ``j`` in one elimination."""
    j, a = _prepare(scheme, j)
    symbols = np.atleast_2d(scheme.field.check(symbols))
    if symbols.shape[1] != len(j):
        raise LengthMismatch(f"{len(j)} indices but {symbols.shape[1]} symbols per block")
    try:
        particular, kernel = solve_batch(a, symbols)
    except NoSolution as exc:
        raise Inconsistent(f"observation is not a restriction of any codeword (rows {exc.rows})") from None
    k = scheme.k
    if kernel and k:
        s_parts = np.array([v[:k] for v in kernel], dtype=np.int64)
        gap = rank_of(scheme.field, s_parts)
        if gap:
            raise AmbiguousSecret(
                f"{len(j)} symbols leave {scheme.field.q}^{gap} candidate secrets (gap {gap})", gap
            )
    return particular[:, :k]


def ozarow_wyner_scheme(field: Field, C_star: LinearCode, mu: int = 0) -> NestedScheme:
    """Coset coding over a perfect main channel (``nu = n``, ``D`` = whole space).

    The message code is spanned by unit vectors on the non-pivot columns of
    ``rref(G*)``, which always complements ``C*``.
    """
    n = C_star.n
    _, pivots = rref(C_star.generator)
    free = [c for c in range(n) if c not in set(pivots)]
    rows = np.zeros((len(free), n), dtype=np.int64)
    for r, c in enumerate(free):
        rows[r, c] = 1
    C = linear_code(field, rows, n, name="C")
    return scheme_new(field, n, n, mu, C, C_star)
