"""Dense linear algebra over a :class:`~eewt.galois.Field`.

Row-vector convention throughout: systems are ``x @ A = b`` and codewords
are ``s @ G``.  Elimination uses the first nonzero entry as pivot.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DataError, LengthMismatch, NoSolution
from .galois import Field


def index_set(indices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Normalise to a strictly increasing tuple, optionally bounded by ``n``."""
    out = tuple(sorted({int(i) for i in indices}))
    if out and out[0] < 0:
        raise DataError(f"negative index {out[0]}")
    if n is not None and out and out[-1] >= n:
        raise DataError(f"index {out[-1]} out of range for length {n}")
    return out


def complement(indices: Sequence[int], n: int) -> tuple[int, ...]:
    s = set(indices)
    return tuple(i for i in range(n) if i not in s)


class FieldMatrix:
    """Immutable ``rows x cols`` matrix with entries in ``field``."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data, cols: int | None = None):
        arr = field.check(data) if not isinstance(data, np.ndarray) else np.asarray(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0 and cols is not None:
            arr = arr.reshape(0, cols)
        if arr.ndim != 2:
            raise LengthMismatch(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise DataError(f"matrix entries outside GF({field.q})")
        arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> FieldMatrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, size: int) -> FieldMatrix:
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self):
        return f"FieldMatrix(GF({self.field.q}), {self.data.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def vstack(self, other: FieldMatrix) -> FieldMatrix:
        return FieldMatrix(self.field, np.vstack([self.data, other.data]).reshape(-1, self.cols))

    def vecmat(self, x) -> np.ndarray:
        """Row vector ``x`` (or a batch of row vectors) times this matrix."""
        return vecmat(self.field, x, self.data)

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def to_hex_lines(self) -> list[str]:
        return [" ".join(self.field.to_hex(v) for v in row) for row in self.data]

    @classmethod
    def from_hex_lines(cls, field: Field, lines: Sequence[str], cols: int) -> FieldMatrix:
        rows = [[int(tok, 16) for tok in line.split()] for line in lines if line.strip()]
        if any(len(r) != cols for r in rows):
            raise LengthMismatch(f"every matrix row must have {cols} entries")
        return cls(field, np.array(rows, dtype=np.int64).reshape(len(rows), cols))


def vecmat(field: Field, x, a: np.ndarray) -> np.ndarray:
    """``x @ a`` over ``field``; ``x`` may be 1-d or a 2-d batch of rows."""
    x = np.asarray(x, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64)
    if x.shape[-1] != a.shape[0]:
        raise LengthMismatch(f"vector length {x.shape[-1]} does not match {a.shape[0]} rows")
    if a.shape[0] == 0:
        return np.zeros(x.shape[:-1] + (a.shape[1],), dtype=np.int64)
    prods = field.mul(x[..., :, None], a)
    return np.asarray(field.sum(prods, axis=-2), dtype=np.int64)


def _rref_array(field: Field, a: np.ndarray, limit: int | None = None):
    """RREF of ``a`` pivoting only in the first ``limit`` columns."""
    m = np.array(a, dtype=np.int64, copy=True)
    rows, cols = m.shape
    limit = cols if limit is None else limit
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        piv = int(m[r, c])
        if piv != 1:
            m[r] = field.mul(field.inv(piv), m[r])
        factors = m[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            m[hit] = field.sub(m[hit], field.mul(factors[hit, None], m[r][None, :]))
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rref(m: FieldMatrix) -> tuple[FieldMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns."""
    out, pivots = _rref_array(m.field, m.data)
    return FieldMatrix(m.field, out), pivots


def rank(m: FieldMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref_array(m.field, m.data)[1])


def rank_of(field: Field, a: np.ndarray) -> int:
    """Rank of a raw integer array."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(_rref_array(field, a)[1])


def select_columns(m: FieldMatrix, j: Sequence[int]) -> FieldMatrix:
    j = list(j)
    return FieldMatrix(m.field, m.data[:, j].reshape(m.rows, len(j)))


def solve_all(a: FieldMatrix, b) -> tuple[np.ndarray, list[np.ndarray]]:
    """Every ``x`` with ``x @ a = b``.

    Returns a particular solution and a kernel basis; the solution set is the
    particular solution plus the span of the basis.  Raises
    :class:`~eewt.errors.NoSolution` when ``b`` is outside the row space.
    """
    b = a.field.check(b)
    if b.shape != (a.cols,):
        raise LengthMismatch(f"right-hand side must have length {a.cols}")
    particular, kernel = solve_batch(a, b[None, :])
    return particular[0], kernel


def solve_batch(a: FieldMatrix, bs) -> tuple[np.ndarray, list[np.ndarray]]:
    """:func:`solve_all` for several right-hand sides sharing one kernel.

    ``bs`` holds one right-hand side per row.  Raises NoSolution if any of
    them is inconsistent; the exception carries ``.rows`` listing which.
    """
    field = a.field
    r = a.rows
    bs = np.atleast_2d(np.asarray(bs, dtype=np.int64))
    if bs.shape[1] != a.cols:
        raise LengthMismatch(f"right-hand sides must have length {a.cols}")
    aug = np.hstack([a.data.T, bs.T]) if a.cols else np.zeros((0, r + bs.shape[0]), dtype=np.int64)
    red, pivots = _rref_array(field, aug, limit=r)
    rk = len(pivots)
    bad = np.nonzero(np.any(red[rk:, r:] != 0, axis=0))[0]
    if bad.size:
        err = NoSolution(f"right-hand side outside the row space ({bad.size} of {bs.shape[0]})")
        err.rows = bad.tolist()
        raise err
    particular = np.zeros((bs.shape[0], r), dtype=np.int64)
    for i, c in enumerate(pivots):
        particular[:, c] = red[i, r:]
    free = [c for c in range(r) if c not in set(pivots)]
    kernel = []
    for f in free:
        v = np.zeros(r, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = field.neg(int(red[i, f]))
        kernel.append(v)
    return particular, kernel
