"""Ready-made nested Reed-Solomon schemes and the scheme descriptor format.

A descriptor is a JSON document.  Generator matrices are stored as lists of
rows, each row a space-separated string of fixed-width hex symbols, and
they are authoritative: loading a descriptor rebuilds the scheme from the
matrices, never from the construction parameters.
"""

from __future__ import annotations

import json

import numpy as np

from .codes import (
    LinearCode,
    Polynomial,
    cyclic_code_from_poly,
    default_points,
    rs_eval_code,
    rs_generator_poly,
)
from .errors import DataError, InvalidDimension, InvalidParams, UsageError
from .galois import Field, field_new, format_field, parse_field
from .matrix import FieldMatrix
from .wiretap import NestedScheme, format_capacity, scheme_new

DESCRIPTOR_FORMAT = "eewt-scheme/1"


def _check_params(n: int, nu: int, mu: int, k: int | None) -> int:
    if mu > nu:
        raise InvalidParams(f"μ > ν (mu={mu}, nu={nu})")
    if mu < 0 or nu > n or n < 1:
        raise InvalidParams(f"need 0 <= mu <= nu <= n (n={n}, nu={nu}, mu={mu})")
    return nu - mu if k is None else k


def eval_scheme(field: Field, n: int, nu: int, mu: int, k: int | None = None) -> NestedScheme:
    """Evaluation-form pair on ``alpha^0..alpha^(n-1)``.

    ``C`` evaluates monomials of degree ``< k`` and ``C*`` those of degree
    ``k..nu-1``; their sum is the ``(n, nu)`` RS code.
    """
    k = _check_params(n, nu, mu, k)
    points = default_points(field, n)
    C = rs_eval_code(field, points, 0, k, name="C")
    C_star = rs_eval_code(field, points, k, nu - k, name="C*")
    return scheme_new(field, n, nu, mu, C, C_star)


def cyclic_scheme(field: Field, nu: int, mu: int, k: int | None = None, n: int | None = None):
    """Cyclic RS pair of length ``q - 1``.

    Returns ``(scheme, g_D, g_C*)``: ``D`` is generated by ``g_D`` with roots
    ``alpha..alpha^(n-nu)``, ``C*`` by ``g_C*`` with roots
    ``alpha..alpha^(n-k*)``, and ``C`` by ``x^i g_D`` for ``i < k``.
    """
    length = field.q - 1
    if n is not None and n != length:
        raise InvalidDimension(f"cyclic construction over GF({field.q}) has n = {length}, not {n}")
    n = length
    k = _check_params(n, nu, mu, k)
    k_star = nu - k
    g_D = rs_generator_poly(field, n, nu)
    g_star = rs_generator_poly(field, n, k_star)
    C = cyclic_code_from_poly(g_D, n, k, name="C")
    C_star = cyclic_code_from_poly(g_star, n, k_star, name="C*")
    return scheme_new(field, n, nu, mu, C, C_star), g_D, g_star


def default_field(construction: str, n: int) -> Field:
    """Smallest GF(2^m) with enough nonzero points (``2^m - 1 >= n``).

    For the cyclic construction the length must then be exactly ``2^m - 1``.
    """
    m = 1
    while (1 << m) - 1 < n:
        m += 1
    if construction == "cyclic" and (1 << m) - 1 != n:
        raise InvalidDimension(f"cyclic construction needs n = 2^m - 1, got {n}")
    return field_new(2, m)


def reference_scheme() -> NestedScheme:
    """The n=7 instance: GF(8) with x^3+x+1, nu=5, mu=3, k=2, k*=3."""
    return eval_scheme(field_new(2, 3, 0xB), 7, 5, 3)


def build(construction: str, n: int, nu: int, mu: int, k: int | None = None, field: Field | None = None):
    """Build a scheme and its descriptor dict."""
    if construction not in ("eval", "cyclic"):
        raise UsageError(f"construction must be 'eval' or 'cyclic', got {construction!r}")
    field = field or default_field(construction, n)
    extra: dict = {}
    if construction == "eval":
        scheme = eval_scheme(field, n, nu, mu, k)
        extra = {"points": "alpha^0..alpha^%d" % (n - 1), "d0_C": 0, "d0_C_star": scheme.k}
    else:
        scheme, g_D, g_star = cyclic_scheme(field, nu, mu, k, n)
        extra = {
            "g_D": g_D.to_hex(),
            "g_D_roots": f"alpha^1..alpha^{g_D.degree}",
            "g_C_star": g_star.to_hex(),
            "g_C_star_roots": f"alpha^1..alpha^{g_star.degree}",
        }
    return scheme, to_descriptor(scheme, construction, extra)


def to_descriptor(scheme: NestedScheme, construction: str = "custom", extra: dict | None = None) -> dict:
    cap = format_capacity(scheme.n, scheme.nu, scheme.mu)
    doc = {
        "format": DESCRIPTOR_FORMAT,
        "field": format_field(scheme.field),
        "construction": construction,
        "n": scheme.n,
        "nu": scheme.nu,
        "mu": scheme.mu,
        "k": scheme.k,
        "k_star": scheme.k_star,
        "capacity": cap,
        "capacity_decimal": round((scheme.nu - scheme.mu) / scheme.n, 3),
    }
    doc.update(extra or {})
    doc["G"] = scheme.message_code.generator.to_hex_lines()
    doc["G_star"] = scheme.randomizer_code.generator.to_hex_lines()
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def from_descriptor(doc: dict) -> NestedScheme:
    if doc.get("format") != DESCRIPTOR_FORMAT:
        raise DataError(f"not a scheme descriptor (format {doc.get('format')!r})")
    try:
        field = parse_field(doc["field"])
        n = int(doc["n"])
        G = FieldMatrix.from_hex_lines(field, doc["G"], n) if doc["G"] else FieldMatrix.zeros(field, 0, n)
        Gs = FieldMatrix.from_hex_lines(field, doc["G_star"], n) if doc["G_star"] else FieldMatrix.zeros(field, 0, n)
        scheme = scheme_new(
            field, n, int(doc["nu"]), int(doc["mu"]), LinearCode(G, "C"), LinearCode(Gs, "C*")
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise DataError(f"malformed scheme descriptor: {exc}") from None
    if scheme.k != doc.get("k", scheme.k) or scheme.k_star != doc.get("k_star", scheme.k_star):
        raise DataError("descriptor dimensions disagree with its generator matrices")
    return scheme


def loads(text: str) -> NestedScheme:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"scheme descriptor is not valid JSON: {exc}") from None
    return from_descriptor(doc)


def poly_from_hex(field: Field, text: str) -> Polynomial:
    """Inverse of :meth:`Polynomial.to_hex` (highest degree first)."""
    return Polynomial(field, [int(t, 16) for t in reversed(text.split())])


def secret_from_hex(field: Field, text: str) -> np.ndarray:
    return field.check([int(t, 16) for t in text.replace(",", " ").split()])


def vector_to_hex(field: Field, vec) -> str:
    return " ".join(field.to_hex(v) for v in np.asarray(vec).ravel())
