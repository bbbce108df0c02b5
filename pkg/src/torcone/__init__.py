"""Exact classification of compact connected toric contact manifolds by
fillability, with lattice, cone and differential-form tooling."""

from . import errors
from .classify import (
    AnglePair,
    ClassificationResult,
    ConeInput,
    FreeTorus3,
    FreeTriple,
    FreeTrivial,
    Verdict,
    classify,
)
from .cone import (
    Cone,
    dual_description,
    is_strictly_convex,
    is_whole_space,
    lineality,
    normalize_to_standard,
    reeb_vector,
    slice_cone,
)
from .lattice import (
    UnimodularWitness,
    complete_to_basis,
    gcd_reduce,
    hermite_normal_form,
    smith_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "AnglePair",
    "ClassificationResult",
    "ConeInput",
    "FreeTorus3",
    "FreeTriple",
    "FreeTrivial",
    "Verdict",
    "classify",
    "Cone",
    "dual_description",
    "is_strictly_convex",
    "is_whole_space",
    "lineality",
    "normalize_to_standard",
    "reeb_vector",
    "slice_cone",
    "UnimodularWitness",
    "complete_to_basis",
    "gcd_reduce",
    "hermite_normal_form",
    "smith_normal_form",
]
