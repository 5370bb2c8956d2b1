"""Linear block codes: Reed-Solomon constructions, shortening, DLP, MDS tests."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DuplicatePoints,
    ExhaustiveTooLarge,
    FieldMismatch,
    InvalidDimension,
    RankDeficient,
    ZeroPointWithShift,
)
from .galois import Field, _raw
from .matrix import FieldMatrix, complement, index_set, rank_of

DLP_MAX_LENGTH = 24
MDS_MAX_SUBSETS = 10**7


class Polynomial:
    """Polynomial over ``field``, coefficients lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and ``degree == -1``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence = ()):
        c = [_raw(v, field) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def __call__(self, x) -> int:
        """Horner evaluation at a field value."""
        x = _raw(x, self.field)
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        f = self.field
        if divisor.degree < 0:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead_inv = f.inv(divisor.coeffs[-1])
        quot = [0] * max(0, len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = f.mul(rem[shift + dd], lead_inv)
            quot[shift] = c
            if c:
                for i, d in enumerate(divisor.coeffs):
                    rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d))
        return Polynomial(f, quot), Polynomial(f, rem[:dd])

    def divides(self, other: Polynomial) -> bool:
        """True when ``self`` divides ``other``."""
        return other.divmod(self)[1].degree < 0

    def to_hex(self) -> str:
        """Coefficients as hex, highest degree first."""
        return " ".join(self.field.to_hex(c) for c in reversed(self.coeffs))

    def __repr__(self):
        return f"Polynomial(GF({self.field.q}), {list(self.coeffs)})"


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.field != b.field:
        raise FieldMismatch("polynomials over different fields")
    f = a.field
    if a.degree < 0 or b.degree < 0:
        return Polynomial(f)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return Polynomial(f, out)


def poly_from_roots(field: Field, roots: Sequence) -> Polynomial:
    """Monic polynomial with exactly ``roots`` (with multiplicity)."""
    p = Polynomial(field, [1])
    for r in roots:
        p = poly_mul(p, Polynomial(field, [field.neg(_raw(r, field)), 1]))
    return p


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An ``(n, k)`` code given by a full-rank ``k x n`` generator matrix."""

    generator: FieldMatrix
    name: str = ""

    def __post_init__(self):
        g = self.generator
        if g.rows > g.cols:
            raise InvalidDimension(f"dimension {g.rows} exceeds length {g.cols}")
        if rank_of(g.field, g.data) != g.rows:
            raise RankDeficient("generator matrix is not full rank")

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def encode(self, message) -> np.ndarray:
        return self.generator.vecmat(message)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"LinearCode{label}(n={self.n}, k={self.k}, GF({self.field.q}))"


def linear_code(field: Field, rows, n: int | None = None, name: str = "") -> LinearCode:
    """Code from a nested list / array of generator rows."""
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, n if n is not None else 0)
    return LinearCode(FieldMatrix(field, arr), name)


def rs_eval_code(field: Field, points: Sequence, first_degree: int, dim: int, name: str = "") -> LinearCode:
    """Generalized RS code: row ``i`` evaluates ``x**(first_degree + i)`` at ``points``."""
    pts = [_raw(p, field) for p in points]
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("evaluation points must be distinct")
    if first_degree > 0 and 0 in pts:
        raise ZeroPointWithShift("a degree shift requires nonzero evaluation points")
    if dim < 0 or dim > len(pts):
        raise InvalidDimension(f"dimension {dim} outside [0, {len(pts)}]")
    pts_arr = np.array(pts, dtype=np.int64)
    rows = [field.pow(pts_arr, first_degree + i) for i in range(dim)]
    arr = np.array(rows, dtype=np.int64).reshape(dim, len(pts))
    return LinearCode(FieldMatrix(field, arr), name)


def default_points(field: Field, n: int) -> list[int]:
    """``alpha^0, ..., alpha^(n-1)`` for the field's primitive element."""
    if n > field.q - 1:
        raise InvalidDimension(f"need n <= q - 1 = {field.q - 1} nonzero points, got n = {n}")
    return [field.alpha_pow(i) for i in range(n)]


def cyclic_code_from_poly(g: Polynomial, n: int, dim: int, name: str = "") -> LinearCode:
    """Rows are the coefficient vectors of ``x^i g(x)`` for ``i < dim``."""
    if g.degree + dim > n:
        raise InvalidDimension(f"deg g + k = {g.degree + dim} exceeds n = {n}")
    arr = np.zeros((dim, n), dtype=np.int64)
    for i in range(dim):
        arr[i, i : i + g.degree + 1] = g.coeffs
    return LinearCode(FieldMatrix(g.field, arr), name)


def rs_generator_poly(field: Field, n: int, dim: int) -> Polynomial:
    """``(x - alpha)(x - alpha^2)...(x - alpha^(n - dim))``."""
    return poly_from_roots(field, [field.alpha_pow(i) for i in range(1, n - dim + 1)])


def rs_cyclic_code(field: Field, dim: int, name: str = "") -> tuple[LinearCode, Polynomial]:
    """Narrow-sense cyclic RS code of length ``q - 1`` and its generator polynomial."""
    n = field.q - 1
    if not 1 <= dim <= n:
        raise InvalidDimension(f"dimension {dim} outside [1, {n}]")
    g = rs_generator_poly(field, n, dim)
    return cyclic_code_from_poly(g, n, dim, name), g


def shortened_dim(code: LinearCode, j: Sequence[int]) -> int:
    """Dimension of the subcode vanishing on every position in ``j``."""
    j = index_set(j, code.n)
    if not j or code.k == 0:
        return code.k
    return code.k - rank_of(code.field, code.generator.data[:, list(j)])


def _check_exhaustive(count: int, limit: int, what: str):
    if count > limit:
        raise ExhaustiveTooLarge(f"{what}: {count} subsets exceeds the exhaustive limit {limit}", count)


def dlp(code: LinearCode, i: int) -> int:
    """``k_i``: the largest dimension of a subcode supported within ``i`` positions."""
    n = code.n
    if not 0 <= i <= n:
        raise InvalidDimension(f"support size {i} outside [0, {n}]")
    if n > DLP_MAX_LENGTH:
        raise ExhaustiveTooLarge(
            f"exhaustive DLP supports n <= {DLP_MAX_LENGTH}; use dlp_sampled for a lower bound",
            math.comb(n, i),
        )
    if i == n:
        return code.k
    best = 0
    for support in itertools.combinations(range(n), i):
        best = max(best, shortened_dim(code, complement(support, n)))
        if best == min(code.k, i):
            break
    return best


def dlp_sampled(code: LinearCode, i: int, trials: int, seed: int) -> int:
    """Lower bound on ``k_i`` from ``trials`` random supports."""
    n = code.n
    if not 0 <= i <= n:
        raise InvalidDimension(f"support size {i} outside [0, {n}]")
    rng = np.random.default_rng(seed)
    best = 0
    for _ in range(trials):
        support = rng.choice(n, size=i, replace=False)
        best = max(best, shortened_dim(code, complement(support.tolist(), n)))
    return best


def dlp_profile(code: LinearCode) -> list[int]:
    return [dlp(code, i) for i in range(code.n + 1)]


def is_mds(code: LinearCode) -> bool:
    """Every ``k`` generator columns are independent."""
    n, k = code.n, code.k
    if k == 0 or k == n:
        return True
    _check_exhaustive(math.comb(n, k), MDS_MAX_SUBSETS, "MDS check")
    g = code.generator.data
    return all(
        rank_of(code.field, g[:, list(cols)]) == k for cols in itertools.combinations(range(n), k)
    )


def _same_space(a: LinearCode, b: LinearCode):
    if a.field != b.field:
        raise FieldMismatch("codes over different fields")
    if a.n != b.n:
        raise InvalidDimension(f"codes of different lengths {a.n} and {b.n}")


def is_subcode(inner: LinearCode, outer: LinearCode) -> bool:
    _same_space(inner, outer)
    stacked = np.vstack([outer.generator.data, inner.generator.data])
    return rank_of(outer.field, stacked) == outer.k


def trivial_intersection(a: LinearCode, b: LinearCode) -> bool:
    _same_space(a, b)
    stacked = np.vstack([a.generator.data, b.generator.data])
    return rank_of(a.field, stacked) == a.k + b.k


def sum_code(a: LinearCode, b: LinearCode, name: str = "") -> LinearCode:
    """``a + b`` for codes with trivial intersection (stacked generators)."""
    _same_space(a, b)
    return LinearCode(a.generator.vstack(b.generator), name)
