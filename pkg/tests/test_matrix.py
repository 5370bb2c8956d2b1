import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eewt import field_new
from eewt.errors import NoSolution
from eewt.matrix import FieldMatrix, index_set, rank, rref, select_columns, solve_all, solve_batch, vecmat


def naive_vecmat(field, x, a):
    out = []
    for c in range(len(a[0])):
        acc = 0
        for r in range(len(x)):
            acc = field.add(acc, field.mul(int(x[r]), int(a[r][c])))
        out.append(acc)
    return out


def test_rref_examples(gf2, gf8):
    eye = FieldMatrix.identity(gf8, 3)
    assert rref(eye) == (eye, (0, 1, 2))
    zero = FieldMatrix.zeros(gf8, 2, 4)
    assert rref(zero) == (zero, ())
    m, piv = rref(FieldMatrix(gf2, [[1, 1], [1, 1]]))
    assert m.tolist() == [[1, 1], [0, 0]] and piv == (0,)


def test_rank_examples(gf8, gf16):
    assert rank(FieldMatrix.identity(gf8, 4)) == 4
    assert rank(FieldMatrix.zeros(gf8, 3, 5)) == 0
    for k in range(1, 8):
        pts = np.array([gf8.alpha_pow(i) for i in range(7)])
        vdm = FieldMatrix(gf8, np.array([gf8.pow(pts, i) for i in range(k)]))
        assert rank(vdm) == k
    pts = np.arange(1, 16)
    assert rank(FieldMatrix(gf16, np.array([gf16.pow(pts, i) for i in range(15)]))) == 15


def test_solve_examples(gf8):
    b = [3, 0, 7]
    particular, kernel = solve_all(FieldMatrix.identity(gf8, 3), b)
    assert particular.tolist() == b and kernel == []
    particular, kernel = solve_all(FieldMatrix.zeros(gf8, 2, 3), [0, 0, 0])
    assert particular.tolist() == [0, 0] and len(kernel) == 2
    with pytest.raises(NoSolution):
        solve_all(FieldMatrix.zeros(gf8, 2, 3), [0, 1, 0])


def test_select_columns(gf8):
    m = FieldMatrix(gf8, [[1, 2, 3], [4, 5, 6]])
    assert select_columns(m, [0, 1, 2]) == m
    assert select_columns(m, []).shape == (2, 0)
    assert select_columns(m, [0, 2]).tolist() == [[1, 3], [4, 6]]


def test_index_set():
    assert index_set([3, 1, 3]) == (1, 3)
    with pytest.raises(Exception):
        index_set([5], 5)


def test_hex_round_trip(gf256):
    m = FieldMatrix(gf256, [[0, 0x1D, 0xFF], [1, 2, 3]])
    lines = m.to_hex_lines()
    assert lines == ["00 1d ff", "01 02 03"]
    assert FieldMatrix.from_hex_lines(gf256, lines, 3) == m


def matrices(max_rows=5, max_cols=6):
    fields = st.sampled_from([(2, 1), (2, 3), (5, 1), (3, 2)])
    return fields.flatmap(
        lambda pm: st.tuples(
            st.just(field_new(*pm)),
            st.integers(0, max_rows).flatmap(
                lambda r: st.integers(0, max_cols).flatmap(
                    lambda c: st.lists(
                        st.lists(st.integers(0, pm[0] ** pm[1] - 1), min_size=c, max_size=c),
                        min_size=r,
                        max_size=r,
                    ).map(lambda rows, c=c: (rows, c))
                )
            ),
        )
    )


def _mat(field, rows_c):
    rows, c = rows_c
    return FieldMatrix(field, np.array(rows, dtype=np.int64).reshape(len(rows), c))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_of_column_subsets(fm):
    field, rows_c = fm
    m = _mat(field, rows_c)
    r = rank(m)
    assert 0 <= r <= min(m.shape)
    for size in range(m.cols + 1):
        for j in itertools.combinations(range(m.cols), size):
            assert rank(select_columns(m, j)) <= min(r, size)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_idempotent(fm):
    field, rows_c = fm
    m = _mat(field, rows_c)
    once, piv = rref(m)
    twice, piv2 = rref(once)
    assert once == twice and piv == piv2
    assert len(piv) == rank(m)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.integers(0, 2**32))
def test_solve_all_solutions_verify(fm, seed):
    field, rows_c = fm
    a = _mat(field, rows_c)
    rng = np.random.default_rng(seed)
    x = rng.integers(0, field.q, size=a.rows)
    b = naive_vecmat(field, x, a.tolist()) if a.rows else [0] * a.cols
    particular, kernel = solve_all(a, b)
    assert naive_vecmat(field, particular, a.tolist()) == list(b) if a.rows else True
    assert len(kernel) == a.rows - rank(a)
    for v in kernel:
        assert all(e == 0 for e in naive_vecmat(field, v, a.tolist()))
    # kernel vectors are independent
    if kernel:
        assert rank(FieldMatrix(field, np.array(kernel))) == len(kernel)


def test_vecmat_matches_naive(gf256):
    rng = np.random.default_rng(5)
    a = rng.integers(0, 256, size=(6, 9))
    for _ in range(20):
        x = rng.integers(0, 256, size=6)
        assert vecmat(gf256, x, a).tolist() == naive_vecmat(gf256, x, a.tolist())
    batch = rng.integers(0, 256, size=(4, 6))
    assert vecmat(gf256, batch, a).tolist() == [naive_vecmat(gf256, x, a.tolist()) for x in batch]


def test_solve_batch_reports_bad_rows(gf8):
    a = FieldMatrix(gf8, [[1, 0, 1]])
    with pytest.raises(NoSolution) as info:
        solve_batch(a, [[2, 0, 2], [1, 1, 1], [3, 0, 3]])
    assert info.value.rows == [1]
