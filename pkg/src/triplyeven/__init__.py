"""Triply even binary codes: forms, radicals, constructions and the length-48 classification."""

from .constructions import (
    extended_doubling,
    generalized_doubling,
    padded_triangular_code,
    pair_code,
    quotient_context,
    triangular_code,
)
from .data import load_desd24
from .divisible import (
    is_doubly_even,
    is_maximal,
    is_triply_even,
    maximalize,
    radical_summary,
)
from .gf2 import LinearCode, dual, weight_enumerator
from .symmetry import automorphism_group, canonical_form, is_equivalent

__version__ = "0.1.0"

__all__ = [
    "LinearCode",
    "automorphism_group",
    "canonical_form",
    "dual",
    "extended_doubling",
    "generalized_doubling",
    "is_doubly_even",
    "is_equivalent",
    "is_maximal",
    "is_triply_even",
    "load_desd24",
    "maximalize",
    "padded_triangular_code",
    "pair_code",
    "quotient_context",
    "radical_summary",
    "triangular_code",
    "weight_enumerator",
]
