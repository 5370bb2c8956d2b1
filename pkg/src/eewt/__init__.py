"""Nested MDS coset coding for the erasure-erasure wiretap channel.

Encode a ``k``-symbol secret into ``n`` symbols so that any ``nu`` of them
recover it and any ``mu`` of them reveal nothing, with exact equivocation
analysis over finite fields.
"""

from .analysis import (
    EquivocationValue,
    LeakageProfile,
    Mode,
    equivocation_bruteforce,
    equivocation_formula,
    leakage_profile,
    ozarow_equivocation,
    verify_reliability,
    verify_security,
)
from .channel import ErasureChannel, ErasureChannelSpec
from .codes import (
    LinearCode,
    Polynomial,
    dlp,
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
from .galois import Field, FieldElement, field_new, parse_field, primitive_element
from .matrix import FieldMatrix, rank, rref, select_columns, solve_all
from .schemes import cyclic_scheme, eval_scheme, reference_scheme
from .wiretap import (
    NestedScheme,
    Observation,
    capacity,
    decode,
    encode,
    encode_random,
    ozarow_wyner_scheme,
    scheme_new,
)

__version__ = "0.1.0"
