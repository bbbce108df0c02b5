"""Polynomial exterior calculus and exact checks of contact and filling forms."""

from .calculus import (
    FormSpace,
    PolyForm,
    VectorField,
    exterior_derivative,
    interior_product,
    wedge,
    wedge_power,
)
from .charts import (
    ManifoldChart,
    SamplePoint,
    evaluate_at_frame,
    evaluate_on_vectors,
    restrict_to_frame,
    sample_points,
    tangent_frame,
)
from .complex import CForm
from .library import (
    alpha_open_book,
    alpha_prime,
    alpha_t,
    beta,
    cosphere_form,
    f1,
    f2,
    filling_form,
    liouville_field,
    named_form,
    torus_area_form,
)
from .poly import Poly
from .verify import (
    VerificationReport,
    action_field,
    contact_volume,
    moment_map,
    standard_weights,
    vanishes_on_chart,
    verify_contact_condition,
    verify_moment_image,
    verify_strong_filling,
    verify_weak_fill,
    weak_fill_derivative,
    weak_fill_identities,
    weak_fill_polynomial,
)

__all__ = [
    "FormSpace",
    "PolyForm",
    "VectorField",
    "exterior_derivative",
    "interior_product",
    "wedge",
    "wedge_power",
    "ManifoldChart",
    "SamplePoint",
    "evaluate_at_frame",
    "evaluate_on_vectors",
    "restrict_to_frame",
    "sample_points",
    "tangent_frame",
    "CForm",
    "alpha_open_book",
    "alpha_prime",
    "alpha_t",
    "beta",
    "cosphere_form",
    "f1",
    "f2",
    "filling_form",
    "liouville_field",
    "named_form",
    "torus_area_form",
    "Poly",
    "VerificationReport",
    "action_field",
    "contact_volume",
    "moment_map",
    "standard_weights",
    "vanishes_on_chart",
    "verify_contact_condition",
    "verify_moment_image",
    "verify_strong_filling",
    "verify_weak_fill",
    "weak_fill_derivative",
    "weak_fill_identities",
    "weak_fill_polynomial",
]
