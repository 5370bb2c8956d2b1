import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eewt import field_new
from eewt.codes import (
    Polynomial,
    cyclic_code_from_poly,
    default_points,
    dlp,
    dlp_profile,
    dlp_sampled,
    is_mds,
    is_subcode,
    linear_code,
    poly_from_roots,
    poly_mul,
    rs_cyclic_code,
    rs_eval_code,
    shortened_dim,
    trivial_intersection,
)
from eewt.errors import (
    DuplicatePoints,
    ExhaustiveTooLarge,
    InvalidDimension,
    RankDeficient,
    ZeroPointWithShift,
)

from conftest import random_full_rank


def all_codewords(code):
    f, k = code.field, code.k
    if k == 0:
        return np.zeros((1, code.n), dtype=np.int64)
    msgs = np.array(list(itertools.product(range(f.q), repeat=k)), dtype=np.int64).reshape(-1, k)
    return code.encode(msgs).reshape(-1, code.n)


def brute_shortened_dim(code, j):
    words = all_codewords(code)
    count = int(np.sum(np.all(words[:, list(j)] == 0, axis=1))) if j else len(words)
    d, acc = 0, 1
    while acc < count:
        acc *= code.field.q
        d += 1
    assert acc == count
    return d


def brute_dlp(code, i):
    """Largest subcode supported inside some i positions, by counting codewords."""
    words = all_codewords(code)
    best = 0
    for support in itertools.combinations(range(code.n), i):
        outside = [c for c in range(code.n) if c not in support]
        count = int(np.sum(np.all(words[:, outside] == 0, axis=1))) if outside else len(words)
        best = max(best, round(np.log(count) / np.log(code.field.q)))
    return best


def brute_min_distance(code):
    words = all_codewords(code)
    return int(np.count_nonzero(words[1:], axis=1).min())


def test_poly_examples(gf8):
    assert poly_from_roots(gf8, []) == Polynomial(gf8, [1])
    a = gf8.generator
    # x^2 + alpha^4 x + alpha^3 with alpha^4 = 0b110, alpha^3 = 0b011
    assert poly_from_roots(gf8, [a, gf8.pow(a, 2)]).coeffs == (3, 6, 1)
    p = Polynomial(gf8, [5, 0, 7])
    assert poly_mul(p, Polynomial(gf8, [1])) == p
    assert poly_mul(p, Polynomial(gf8)) == Polynomial(gf8)
    assert Polynomial(gf8, [1, 2, 0, 0]).degree == 1


def test_poly_from_roots_has_those_roots(gf16):
    roots = [gf16.alpha_pow(i) for i in (1, 2, 5, 5)]
    g = poly_from_roots(gf16, roots)
    assert g.degree == 4 and g.coeffs[-1] == 1
    for r in roots:
        assert g(r) == 0
    q, r = g.divmod(poly_from_roots(gf16, roots[:2]))
    assert r.degree < 0 and q == poly_from_roots(gf16, roots[2:])


def test_rs_eval_examples(gf8):
    pts = default_points(gf8, 7)
    D = rs_eval_code(gf8, pts, 0, 5)
    assert (D.n, D.k) == (7, 5) and is_mds(D)
    C_star = rs_eval_code(gf8, pts, 2, 3)
    C = rs_eval_code(gf8, pts, 0, 2)
    assert is_mds(C_star)
    assert trivial_intersection(C, C_star)
    full = rs_eval_code(gf8, list(range(8)), 0, 8)
    assert full.k == full.n == 8
    with pytest.raises(DuplicatePoints):
        rs_eval_code(gf8, [1, 2, 2], 0, 2)
    with pytest.raises(ZeroPointWithShift):
        rs_eval_code(gf8, [0, 1, 2], 1, 2)
    with pytest.raises(InvalidDimension):
        rs_eval_code(gf8, [1, 2, 3], 0, 4)


def test_rs_cyclic_255(gf256):
    for k, deg in ((200, 55), (150, 105)):
        code, g = rs_cyclic_code(gf256, k)
        assert (code.n, code.k, g.degree) == (255, k, deg)
        assert g.coeffs[-1] == 1
        roots = {e for e in range(255) if g(gf256.alpha_pow(e)) == 0}
        assert roots == set(range(1, deg + 1))
    D, g_D = rs_cyclic_code(gf256, 200)
    C_star, g_star = rs_cyclic_code(gf256, 150)
    assert g_D.divides(g_star)
    assert is_subcode(C_star, D)


def test_rs_cyclic_small(gf8):
    code, g = rs_cyclic_code(gf8, 5)
    assert (code.n, code.k) == (7, 5)
    assert g == poly_from_roots(gf8, [gf8.alpha_pow(1), gf8.alpha_pow(2)]) == Polynomial(gf8, [3, 6, 1])
    assert is_mds(code)
    with pytest.raises(InvalidDimension):
        rs_cyclic_code(gf8, 0)
    with pytest.raises(InvalidDimension):
        rs_cyclic_code(gf8, 8)


def test_cyclic_codewords_are_cyclic(gf8):
    code, _ = rs_cyclic_code(gf8, 4)
    words = all_codewords(code)
    as_set = {tuple(w) for w in words.tolist()}
    assert all(tuple(np.roll(w, 1)) in as_set for w in words.tolist())


@pytest.mark.parametrize("m", [3, 4])
def test_cyclic_nesting(m):
    f = field_new(2, m)
    n = f.q - 1
    codes = {k: rs_cyclic_code(f, k) for k in range(1, n + 1)}
    for k, kk in itertools.combinations_with_replacement(range(1, n + 1), 2):
        small, g_small = codes[k]
        big, g_big = codes[kk]
        assert g_big.divides(g_small)
        assert is_subcode(small, big)


def test_shortened_dim_examples(gf8):
    D = rs_eval_code(gf8, default_points(gf8, 7), 0, 5)
    assert shortened_dim(D, []) == 5
    assert shortened_dim(D, [0, 3, 6]) == 2
    assert shortened_dim(D, [0, 1, 2, 3, 4, 5]) == 0


def test_dlp_examples(gf8):
    C_star = rs_eval_code(gf8, default_points(gf8, 7), 2, 3)
    assert dlp(C_star, 7) == 3
    assert dlp(C_star, 0) == 0
    assert dlp(C_star, 5) == 1
    assert dlp_profile(C_star) == [brute_dlp(C_star, i) for i in range(8)]


def test_dlp_limits(gf256):
    code, _ = rs_cyclic_code(gf256, 200)
    with pytest.raises(ExhaustiveTooLarge):
        dlp(code, 100)
    with pytest.raises(ExhaustiveTooLarge):
        is_mds(code)
    assert dlp_sampled(code, 250, trials=3, seed=1) == 195


def test_is_mds_examples(gf2, gf8, binary42):
    assert is_mds(linear_code(gf2, [[1] * 6]))
    assert is_mds(rs_eval_code(gf8, default_points(gf8, 7), 0, 5))
    assert not is_mds(binary42)


def test_subcode_and_intersection(gf8):
    pts = default_points(gf8, 7)
    D = rs_eval_code(gf8, pts, 0, 5)
    assert is_subcode(D, D)
    assert is_subcode(rs_eval_code(gf8, pts, 2, 3), D)
    assert not is_subcode(D, rs_eval_code(gf8, pts, 2, 3))
    assert trivial_intersection(rs_eval_code(gf8, pts, 0, 2), rs_eval_code(gf8, pts, 2, 3))
    assert not trivial_intersection(rs_eval_code(gf8, pts, 0, 3), rs_eval_code(gf8, pts, 2, 3))


def test_rank_deficient_generator(gf8):
    with pytest.raises(RankDeficient):
        linear_code(gf8, [[1, 2, 3], [gf8.mul(5, 1), gf8.mul(5, 2), gf8.mul(5, 3)]])


def test_mds_distance_agrees_with_brute(gf8, binary42):
    for code in (rs_eval_code(gf8, default_points(gf8, 6), 1, 3), binary42):
        assert is_mds(code) == (brute_min_distance(code) == code.n - code.k + 1)


@pytest.mark.parametrize(
    "field_args, n, d0, k",
    [((2, 3), 7, 0, 3), ((2, 3), 7, 2, 3), ((2, 4), 12, 0, 5), ((2, 4), 12, 3, 7), ((3, 2), 8, 1, 4)],
)
def test_rs_shortened_dims_exhaustive(field_args, n, d0, k):
    f = field_new(*field_args)
    code = rs_eval_code(f, default_points(f, n), d0, k)
    assert is_mds(code)
    for size in range(n + 1):
        for j in itertools.combinations(range(n), size):
            assert shortened_dim(code, j) == max(0, k - size)


@pytest.mark.parametrize("m, k", [(3, 2), (3, 5), (4, 6), (4, 11)])
def test_cyclic_shortened_dims_exhaustive(m, k):
    f = field_new(2, m)
    code, _ = rs_cyclic_code(f, k)
    n = code.n
    if n <= 12:
        subsets = (j for size in range(n + 1) for j in itertools.combinations(range(n), size))
    else:
        rng = np.random.default_rng(k)
        subsets = (tuple(sorted(rng.choice(n, size=s, replace=False))) for s in rng.integers(0, n + 1, 400))
    for j in subsets:
        assert shortened_dim(code, j) == max(0, k - len(j))


codes_strategy = st.tuples(
    st.sampled_from([(2, 1), (2, 2), (3, 1)]),
    st.integers(1, 6),
    st.integers(0, 6),
    st.integers(0, 2**32),
)


def _random_code(params):
    (p, m), n, k, seed = params
    k = min(k, n)
    f = field_new(p, m)
    g = random_full_rank(f, k, n, np.random.default_rng(seed)) if k else np.zeros((0, n), dtype=np.int64)
    return linear_code(f, g, n)


@settings(max_examples=60, deadline=None)
@given(codes_strategy)
def test_dlp_properties(params):
    code = _random_code(params)
    prof = dlp_profile(code)
    assert prof[0] == 0 and prof[-1] == code.k
    assert all(b - a in (0, 1) for a, b in zip(prof, prof[1:]))
    if code.field.q ** code.k <= 4096:
        assert prof == [brute_dlp(code, i) for i in range(code.n + 1)]


@settings(max_examples=60, deadline=None)
@given(codes_strategy, st.data())
def test_shortening_monotone(params, data):
    code = _random_code(params)
    j_big = data.draw(st.sets(st.integers(0, code.n - 1)))
    j_small = data.draw(st.sets(st.sampled_from(sorted(j_big)))) if j_big else set()
    assert shortened_dim(code, sorted(j_big)) <= shortened_dim(code, sorted(j_small))
    if code.field.q ** code.k <= 4096:
        assert shortened_dim(code, sorted(j_big)) == brute_shortened_dim(code, sorted(j_big))


def test_cyclic_code_from_poly_rejects_overflow(gf8):
    g = poly_from_roots(gf8, [1, 2, 3])
    with pytest.raises(InvalidDimension):
        cyclic_code_from_poly(g, 7, 5)
