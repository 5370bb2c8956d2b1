"""Exact equivocation of nested coset schemes.

Two independent routes to ``H(S | X_J)`` in base-``q`` units:

* :func:`equivocation_formula` from shortened-code dimensions,
* :func:`equivocation_bruteforce`, which enumerates every ``(S, E)`` and
  measures the posterior directly.

Everything is integer-valued; no floating point entropy anywhere.
"""

from __future__ import annotations

import itertools
import math
import weakref
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .codes import LinearCode, shortened_dim
from .errors import AmbiguousSecret, DataError, ExhaustiveTooLarge, NonUniformPosterior, TooLargeToEnumerate, UsageError
from .matrix import index_set, vecmat
from .wiretap import NestedScheme, Observation, decode, draw_uniform, encode, secret_gap

BRUTEFORCE_MAX = 1 << 24
VERIFY_MAX_SUBSETS = 10**6
_CHUNK = 1 << 15


@dataclass(frozen=True)
class EquivocationValue:
    """``H(S | X_J)`` in base-``q`` units.

    ``raw_count`` is the number of equally likely candidate secrets; when
    ``exact`` it equals ``q ** dims``.
    """

    dims: int
    exact: bool = True
    raw_count: int | None = None


@dataclass(frozen=True)
class Mode:
    """``exhaustive`` or ``sampled`` with a trial count and seed."""

    kind: str = "exhaustive"
    trials: int = 0
    seed: int = 0

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> Mode:
        text = text.strip()
        if text == "exhaustive":
            return cls()
        if text.startswith("sampled:"):
            try:
                trials = int(text.split(":", 1)[1])
            except ValueError:
                trials = -1
            if trials > 0:
                return cls("sampled", trials, seed)
        raise UsageError(f"mode must be 'exhaustive' or 'sampled:N', got {text!r}")

    @property
    def exhaustive(self) -> bool:
        return self.kind == "exhaustive"

    def __str__(self):
        return "exhaustive" if self.exhaustive else f"sampled:{self.trials} seed={self.seed}"


EXHAUSTIVE = Mode()


def equivocation_formula(scheme: NestedScheme, j: Sequence[int]) -> EquivocationValue:
    dims = secret_gap(scheme, j)
    return EquivocationValue(dims, True, scheme.field.q**dims)


def ozarow_equivocation(C_star: LinearCode, w: Sequence[int]) -> EquivocationValue:
    """``n - |W| - dim C*`` shortened on ``W`` (perfect main channel)."""
    w = index_set(w, C_star.n)
    dims = C_star.n - len(w) - shortened_dim(C_star, w)
    return EquivocationValue(dims, True, C_star.field.q**dims)


_codeword_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def all_codewords(scheme: NestedScheme) -> tuple[np.ndarray, np.ndarray]:
    """Every transmitted word and the index of its secret, over all ``(S, E)``.

    Row ``t`` encodes the base-``q`` digits of ``t``: the first ``k`` digits
    (most significant) are ``S``, the rest ``E``; so the secret index is
    ``t // q**k*``.
    """
    if scheme in _codeword_cache:
        return _codeword_cache[scheme]
    q, r = scheme.field.q, scheme.k + scheme.k_star
    total = q**r
    if total > BRUTEFORCE_MAX:
        raise TooLargeToEnumerate(f"q^(k+k*) = {total} exceeds the enumeration bound 2^24")
    words = np.empty((total, scheme.n), dtype=np.int64)
    weights = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        coeffs = (idx[:, None] // weights[None, :]) % q
        words[start : start + idx.size] = vecmat(scheme.field, coeffs, scheme.stacked)
    secrets = np.arange(total, dtype=np.int64) // q**scheme.k_star
    _codeword_cache[scheme] = (words, secrets)
    return words, secrets


def _ilog(value: int, base: int) -> tuple[int, bool]:
    d, acc = 0, 1
    while acc * base <= value:
        acc *= base
        d += 1
    return d, acc == value


def equivocation_bruteforce(scheme: NestedScheme, j: Sequence[int]) -> EquivocationValue:
    """Posterior over ``S`` measured by enumerating all ``(S, E)`` pairs.

    For each possible observation the candidate secrets must be equally
    likely and equally numerous across observations; anything else raises
    :class:`~eewt.errors.NonUniformPosterior`.
    """
    j = list(index_set(j, scheme.n))
    words, secrets = all_codewords(scheme)
    pairs = np.column_stack([words[:, j], secrets])
    uniq, counts = np.unique(pairs, axis=0, return_counts=True)
    obs = uniq[:, :-1]
    if obs.shape[1]:
        starts = np.flatnonzero(np.r_[True, np.any(obs[1:] != obs[:-1], axis=1)])
    else:
        starts = np.array([0])
    sizes = np.diff(np.r_[starts, len(uniq)])
    if np.any(np.minimum.reduceat(counts, starts) != np.maximum.reduceat(counts, starts)):
        raise NonUniformPosterior(f"posterior over S is not uniform for J={tuple(j)}")
    if sizes.min() != sizes.max():
        raise NonUniformPosterior(f"candidate-set size varies with the observation for J={tuple(j)}")
    support = int(sizes[0])
    dims, exact = _ilog(support, scheme.field.q)
    return EquivocationValue(dims, exact, support)


def _subsets(n: int, size: int, mode: Mode, rng: np.random.Generator | None = None) -> Iterator[tuple[int, ...]]:
    count = math.comb(n, size)
    if mode.exhaustive:
        if count > VERIFY_MAX_SUBSETS:
            raise ExhaustiveTooLarge(
                f"C({n}, {size}) = {count} subsets exceeds {VERIFY_MAX_SUBSETS}; use --mode sampled:N", count
            )
        yield from itertools.combinations(range(n), size)
        return
    rng = rng if rng is not None else np.random.default_rng(mode.seed)
    for _ in range(mode.trials):
        yield tuple(sorted(rng.choice(n, size=size, replace=False).tolist()))


@dataclass
class VerificationReport:
    kind: str
    passed: bool
    subset_size: int
    mode: Mode
    checked: int
    expected: int
    violations: list[tuple[tuple[int, ...], int, str]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            "PASS" if self.passed else "FAIL",
            f"check: {self.kind}",
            f"subset_size: {self.subset_size}",
            f"mode: {self.mode}" + ("" if self.mode.exhaustive else " (non-exhaustive)"),
            f"subsets_checked: {self.checked}",
            f"expected_equivocation: {self.expected}",
            f"violations: {len(self.violations)}",
        ]
        for subset, dims, note in self.violations:
            label = "W" if self.kind == "security" else "M"
            extra = f" {note}" if note else ""
            lines.append(f"  {label}={{{','.join(map(str, subset))}}} equivocation={dims}{extra}")
        return "\n".join(lines) + "\n"


def verify_security(scheme: NestedScheme, mode: Mode = EXHAUSTIVE) -> VerificationReport:
    """Check equivocation ``k`` for every (or sampled) ``W`` with ``|W| = mu``."""
    violations = {}
    checked = 0
    for w in _subsets(scheme.n, scheme.mu, mode):
        checked += 1
        dims = equivocation_formula(scheme, w).dims
        if dims != scheme.k:
            violations[w] = (w, dims, "")
    found = sorted(violations.values())
    return VerificationReport("security", not found, scheme.mu, mode, checked, scheme.k, found)


def verify_reliability(scheme: NestedScheme, mode: Mode = EXHAUSTIVE, seed: int | None = None) -> VerificationReport:
    """Check zero equivocation and a decode round trip for every ``M`` with ``|M| = nu``.

    The round trip uses a fresh ``(S, E)`` per subset drawn from ``seed``
    (defaults to the mode's seed).
    """
    rng = np.random.default_rng(mode.seed if seed is None else seed)
    violations = {}
    checked = 0
    for m in _subsets(scheme.n, scheme.nu, mode, rng):
        checked += 1
        dims = equivocation_formula(scheme, m).dims
        S = draw_uniform(scheme.field, rng, scheme.k)
        E = draw_uniform(scheme.field, rng, scheme.k_star)
        x = encode(scheme, S, E)
        note = ""
        try:
            if not np.array_equal(decode(scheme, Observation.of(x, m)), S):
                note = "decoded wrong secret"
        except AmbiguousSecret as exc:
            note = f"ambiguous (gap {exc.gap})"
        except DataError as exc:
            note = f"decode failed: {exc}"
        if dims != 0 or note:
            violations[m] = (m, dims, note)
    found = sorted(violations.values())
    return VerificationReport("reliability", not found, scheme.nu, mode, checked, 0, found)


@dataclass(frozen=True)
class LeakageRow:
    m: int
    min_equivocation: int
    max_equivocation: int
    k: int
    exhaustive: bool

    @property
    def min_leaked(self) -> int:
        return self.k - self.max_equivocation

    @property
    def max_leaked(self) -> int:
        return self.k - self.min_equivocation


@dataclass
class LeakageProfile:
    k: int
    rows: list[LeakageRow]

    HEADER = "m,min_equivocation,max_equivocation,min_leaked,max_leaked,exhaustive"

    def to_csv(self) -> str:
        out = [self.HEADER]
        for r in self.rows:
            out.append(
                f"{r.m},{r.min_equivocation},{r.max_equivocation},{r.min_leaked},{r.max_leaked},"
                f"{str(r.exhaustive).lower()}"
            )
        return "\n".join(out) + "\n"

    @classmethod
    def from_csv(cls, text: str, k: int) -> LeakageProfile:
        lines = [ln for ln in text.strip().splitlines() if ln]
        if lines[0] != cls.HEADER:
            raise DataError("unexpected leakage CSV header")
        rows = []
        for ln in lines[1:]:
            m, lo, hi, _, _, ex = ln.split(",")
            rows.append(LeakageRow(int(m), int(lo), int(hi), k, ex == "true"))
        return cls(k, rows)


def leakage_profile(scheme: NestedScheme, mode: Mode = EXHAUSTIVE) -> LeakageProfile:
    """Min/max equivocation over revealed sets of each size ``0..n``.

    In sampled mode, sizes with at most ``trials`` subsets are still swept
    exhaustively and flagged as such.
    """
    rng = np.random.default_rng(mode.seed)
    rows = []
    n = scheme.n
    for m in range(n + 1):
        sweep_all = mode.exhaustive or math.comb(n, m) <= mode.trials
        sub_mode = EXHAUSTIVE if sweep_all else mode
        values = [equivocation_formula(scheme, j).dims for j in _subsets(n, m, sub_mode, rng)]
        rows.append(LeakageRow(m, min(values), max(values), scheme.k, sweep_all))
    return LeakageProfile(scheme.k, rows)
