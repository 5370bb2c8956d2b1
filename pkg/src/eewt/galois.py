"""Arithmetic in GF(p^m), q = p^m <= 2^16.

Elements are integers in ``[0, q)`` read as coefficient vectors in the
polynomial basis: base-``p`` digit ``i`` is the coefficient of ``x^i`` (for
``p = 2`` that is bit ``i``).  All :class:`Field` operations accept plain
ints or integer numpy arrays and broadcast; scalar inputs give ints back.

:class:`FieldElement` is the checked, operator-overloaded wrapper used at API
boundaries.  Matrices and codes keep raw integer arrays internally.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DivisionByZero, FieldMismatch, ReducibleModulus, UnsupportedSize, UsageError

MAX_ORDER = 1 << 16

# Conventional primitive polynomials; 0x11D is the usual Reed-Solomon choice for GF(256).
DEFAULT_BINARY_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _to_digits(value: int, p: int, length: int) -> list[int]:
    digits = []
    for _ in range(length):
        value, r = divmod(value, p)
        digits.append(r)
    return digits


def _from_digits(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + d
    return value


# -- small polynomial helpers over the prime field (coefficient lists, low first)


def _pp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by monic ``b`` over GF(p)."""
    a = _pp_trim(list(a))
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _pp_trim(a)
    return a


def _pp_is_irreducible(modulus: list[int], p: int) -> bool:
    m = len(modulus) - 1
    for deg in range(1, m // 2 + 1):
        for low in range(p**deg):
            divisor = _to_digits(low, p, deg) + [1]
            if not _pp_mod(modulus, divisor, p):
                return False
    return True


def _normalize_modulus(p: int, m: int, modulus) -> list[int]:
    if isinstance(modulus, (int, np.integer)):
        coeffs = _to_digits(int(modulus), p, m + 2)
        _pp_trim(coeffs)
    else:
        coeffs = [int(c) for c in modulus]
    if len(coeffs) != m + 1:
        raise UsageError(f"modulus must have degree {m} ({m + 1} coefficients), got {len(coeffs)}")
    if any(not 0 <= c < p for c in coeffs):
        raise UsageError(f"modulus coefficients must lie in [0, {p})")
    if coeffs[-1] != 1:
        raise UsageError("modulus must be monic")
    return coeffs


class Field:
    """The finite field GF(p^m) defined by a monic irreducible ``modulus``.

    Equality and hashing are by ``(p, m, modulus)``, so two independently
    constructed copies of the same field interoperate.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not _is_prime(p):
            raise UsageError(f"characteristic {p} is not prime")
        if m < 1:
            raise UsageError("degree must be positive")
        if p**m > MAX_ORDER:
            raise UnsupportedSize(f"GF({p}^{m}) exceeds the supported order 2^16")
        if modulus is None:
            modulus = default_modulus(p, m)
        coeffs = _normalize_modulus(p, m, modulus)
        if not _pp_is_irreducible(coeffs, p):
            raise ReducibleModulus(f"modulus {coeffs} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(coeffs)
        self.modulus_int = _from_digits(coeffs, p)
        self._powers = np.array([p**i for i in range(m)], dtype=np.int64)
        self._build_tables()

    # -- reference arithmetic, independent of the tables

    def mul_poly(self, a: int, b: int) -> int:
        """Multiply by polynomial product and reduction modulo ``modulus``."""
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.m:
                    a ^= self.modulus_int
            return r
        da = _to_digits(a, self.p, self.m)
        db = _to_digits(b, self.p, self.m)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _pp_mod(prod, list(self.modulus), self.p)
        return _from_digits(rem, self.p)

    def _pow_poly(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul_poly(r, a)
            a = self.mul_poly(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        order = self.q - 1
        factors = _prime_factors(order)
        gen = 1
        if order > 1:
            for cand in range(2, self.q):
                if all(self._pow_poly(cand, order // r) != 1 for r in factors):
                    gen = cand
                    break
        self.generator = gen
        exp = [0] * (2 * order)
        log = [0] * self.q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self.mul_poly(x, gen)
        exp[order:] = exp[:order]
        self._exp_list = exp
        self._log_list = log
        self._exp = np.array(exp, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)

    # -- vectorised arithmetic

    def _digitwise(self, a, fn):
        out = 0
        for i in range(self.m):
            pw = int(self._powers[i])
            out = out + fn((a[0] // pw) % self.p, (a[1] // pw) % self.p) * pw
        return out

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self._digitwise((a, b), lambda x, y: (x + y) % self.p)

    def neg(self, a):
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self._digitwise((a, a), lambda x, _: (-x) % self.p)

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        return self._digitwise((a, b), lambda x, y: (x - y) % self.p)

    def mul(self, a, b):
        if isinstance(a, (int, np.integer)) and isinstance(b, (int, np.integer)):
            if a == 0 or b == 0:
                return 0
            return self._exp_list[self._log_list[a] + self._log_list[b]]
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        if isinstance(a, (int, np.integer)):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if isinstance(a, (int, np.integer)):
            if a == 0:
                if e < 0:
                    raise DivisionByZero("zero to a negative power")
                return 1 if e == 0 else 0
            return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]
        a = np.asarray(a, dtype=np.int64)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero("zero to a negative power")
        r = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 1 if e == 0 else 0, r)

    def alpha_pow(self, e: int) -> int:
        """``generator ** e`` for any integer ``e``."""
        return self._exp_list[e % (self.q - 1)]

    def dot(self, x, y) -> int:
        """Inner product of two 1-d vectors."""
        return int(self.sum(self.mul(np.asarray(x), np.asarray(y))))

    def sum(self, a, axis=None):
        """Field sum along ``axis`` (all entries when ``None``)."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.m == 1:
            return np.sum(a, axis=axis) % self.p
        out = 0
        for i in range(self.m):
            pw = int(self._powers[i])
            out = out + (np.sum((a // pw) % self.p, axis=axis) % self.p) * pw
        return out

    # -- elements

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, int(value))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def check(self, values) -> np.ndarray:
        """Coerce to an int64 array and verify every entry is in ``[0, q)``."""
        if isinstance(values, FieldElement):
            values = [values]
        arr = np.asarray([_raw(v, self) for v in values] if _has_elements(values) else values,
                         dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise FieldMismatch(f"values outside GF({self.q})")
        return arr

    @property
    def hex_width(self) -> int:
        return len(format(self.q - 1, "x"))

    def to_hex(self, value: int) -> str:
        return format(int(value), f"0{self.hex_width}x")

    # -- identity

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field({format_field(self)!r})"


def _has_elements(values) -> bool:
    if isinstance(values, np.ndarray):
        return values.dtype == object
    try:
        return any(isinstance(v, FieldElement) for v in values)
    except TypeError:
        return False


def _raw(v, field: Field) -> int:
    if isinstance(v, FieldElement):
        if v.field != field:
            raise FieldMismatch("element belongs to a different field")
        return v.value
    return int(v)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldMismatch(f"{self.value} is not an element of GF({self.field.q})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("operands come from different fields")
            return other.value
        if isinstance(other, (int, np.integer)) and 0 <= other < self.field.q:
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else FieldElement(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        """Multiplicative order."""
        if self.value == 0:
            raise DivisionByZero("zero has no multiplicative order")
        q1 = self.field.q - 1
        return q1 // np.gcd(self.field._log_list[self.value], q1)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF{self.field.q}({self.value:#x})"


FieldLike = Union[FieldElement, int]


def default_modulus(p: int, m: int) -> int:
    """Conventional binary modulus, else the smallest monic irreducible."""
    if p == 2 and m in DEFAULT_BINARY_MODULI:
        return DEFAULT_BINARY_MODULI[m]
    if m == 1:
        return p  # x
    for low in range(p**m):
        coeffs = _to_digits(low, p, m) + [1]
        if _pp_is_irreducible(coeffs, p):
            return _from_digits(coeffs, p)
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple) -> Field:
    return Field(p, m, list(modulus))


def field_new(p: int, m: int, modulus=None) -> Field:
    """Validated (and cached) GF(p^m).

    ``modulus`` is a coefficient list, lowest degree first, or the integer
    whose base-``p`` digits are those coefficients (``0x11D`` for
    x^8+x^4+x^3+x^2+1).  ``None`` picks :func:`default_modulus`.
    """
    if not _is_prime(p):
        raise UsageError(f"characteristic {p} is not prime")
    if m < 1:
        raise UsageError("degree must be positive")
    if p**m > MAX_ORDER:
        raise UnsupportedSize(f"GF({p}^{m}) exceeds the supported order 2^16")
    if modulus is None:
        modulus = default_modulus(p, m)
    return _cached_field(p, m, tuple(_normalize_modulus(p, m, modulus)))


def primitive_element(field: Field) -> FieldElement:
    """Smallest element of multiplicative order q - 1."""
    return FieldElement(field, field.generator)


def _check_pair(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatch("operands come from different fields")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def pow(a: FieldElement, e: int) -> FieldElement:  # noqa: A001 - mirrors the field operation name
    return a**e


_FIELD_RE = re.compile(
    r"^\s*gf\(\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?:,\s*modulus\s*=\s*(0[xX][0-9a-fA-F]+|\d+)\s*)?\)\s*$"
)


def parse_field(text: str) -> Field:
    """Parse ``gf(p^m, modulus=0x...)``; ``gf(p^m)`` uses the default modulus."""
    match = _FIELD_RE.match(text)
    if not match:
        raise UsageError(f"cannot parse field spec {text!r}; expected gf(p^m, modulus=0x...)")
    p = int(match.group(1))
    m = int(match.group(2) or 1)
    modulus = int(match.group(3), 0) if match.group(3) else None
    return field_new(p, m, modulus)


def format_field(field: Field) -> str:
    return f"gf({field.p}^{field.m}, modulus={field.modulus_int:#X})".replace("0X", "0x")
