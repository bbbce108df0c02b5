"""Named contact forms, filling forms and vector fields in real coordinates.

Each form is first written in complex notation through :class:`CForm` and
then realified, so that e.g. ``(i/4)(z dz̄ - z̄ dz)`` becomes
``(1/2)(a db - b da)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..errors import InvalidInput
from .calculus import FormSpace, PolyForm, VectorField, wedge
from .charts import ManifoldChart
from .complex import CForm, i_times, realify_vector_field

__all__ = [
    "beta",
    "filling_form",
    "liouville_field",
    "alpha_prime",
    "alpha_open_book",
    "alpha_t",
    "f1",
    "f2",
    "cosphere_form",
    "dtheta12",
    "torus_area_form",
    "named_form",
    "NAMED_FORMS",
]

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


def _space(chart: ManifoldChart, space: Optional[FormSpace]) -> FormSpace:
    if space is None:
        return chart.space
    if space.coords != chart.space.coords:
        raise InvalidInput("form space does not match the chart coordinates")
    return space


def _zs(chart: ManifoldChart, sp: FormSpace) -> list[CForm]:
    return [CForm.z(sp, a, b) for a, b in chart.complex_pairs]


def _standard_term(z: CForm) -> CForm:
    """``(i/4)(z dz̄ - z̄ dz)``."""
    return i_times(QUARTER, z * z.conj().d() - z.conj() * z.d())


def beta(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """``β_k = Σ x_l dθ_l + (i/4) Σ (z_j dz̄_j - z̄_j dz_j)`` on ``TkSphere(d, k)``."""
    if chart.kind != "TkSphere":
        raise InvalidInput("β_k lives on a TkSphere chart")
    sp = _space(chart, space)
    out = CForm(PolyForm.zero(sp, 1))
    for x, th in zip(chart.reals, chart.thetas):
        out = out + CForm(wedge(PolyForm.function(sp, x), PolyForm.d(sp, th)))
    for z in _zs(chart, sp):
        out = out + _standard_term(z)
    return out.real()


def filling_form(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """``ω = Σ dx_l ∧ dθ_l + (i/2) Σ dz_j ∧ dz̄_j`` on ``T^k × D``."""
    if chart.kind != "TkSphere":
        raise InvalidInput("the filling form lives on a TkSphere chart")
    sp = _space(chart, space)
    out = CForm(PolyForm.zero(sp, 2))
    for x, th in zip(chart.reals, chart.thetas):
        out = out + CForm(wedge(PolyForm.d(sp, x), PolyForm.d(sp, th)))
    for z in _zs(chart, sp):
        out = out + i_times(HALF, z.d() * z.conj().d())
    return out.real()


def liouville_field(chart: ManifoldChart, space: Optional[FormSpace] = None) -> VectorField:
    """``X = Σ x_l ∂/∂x_l + (1/2) Σ (z_j ∂/∂z_j + z̄_j ∂/∂z̄_j)``."""
    if chart.kind != "TkSphere":
        raise InvalidInput("the Liouville field lives on a TkSphere chart")
    sp = _space(chart, space)
    real_part = {x: sp.poly(x) for x in chart.reals}
    hol = {}
    for (a, b), z in zip(chart.complex_pairs, _zs(chart, sp)):
        hol[(a, b)] = (z * HALF, z.conj() * HALF)
    return realify_vector_field(sp, real_part, hol)


def _t2s3(chart: ManifoldChart) -> None:
    if chart.kind != "T2S3":
        raise InvalidInput("this form lives on the T2S3 chart")


def alpha_prime(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """``α' = (i/4)(z₁ dz̄₁ - z̄₁ dz₁ - (z₂ dz̄₂ - z̄₂ dz₂))``."""
    _t2s3(chart)
    sp = _space(chart, space)
    z1, z2 = _zs(chart, sp)
    return (_standard_term(z1) - _standard_term(z2)).real()


def f1(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """``i (z₁ z̄₂ - z̄₁ z₂)`` as a real function (0-form)."""
    _t2s3(chart)
    sp = _space(chart, space)
    z1, z2 = _zs(chart, sp)
    return i_times(1, z1 * z2.conj() - z1.conj() * z2).real()


def f2(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """``z₁ z̄₂ + z̄₁ z₂`` as a real function (0-form)."""
    _t2s3(chart)
    sp = _space(chart, space)
    z1, z2 = _zs(chart, sp)
    return (z1 * z2.conj() + z1.conj() * z2).real()


def alpha_t(chart: ManifoldChart, t, space: Optional[FormSpace] = None) -> PolyForm:
    """``α_t = t (f₁ dθ₁ + f₂ dθ₂) + α'``; ``t`` is a number or a parameter name."""
    _t2s3(chart)
    sp = _space(chart, space)
    tt = sp.poly(t)
    g1 = f1(chart, sp).components.get((), sp.poly(0))
    g2 = f2(chart, sp).components.get((), sp.poly(0))
    torus = PolyForm.d(sp, "theta1") * (g1 * tt) + PolyForm.d(sp, "theta2") * (g2 * tt)
    return torus + alpha_prime(chart, sp)


def alpha_open_book(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """The invariant contact form ``α = f₁ dθ₁ + f₂ dθ₂ + α'`` on ``T^2 × S^3``."""
    return alpha_t(chart, 1, space)


def dtheta12(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    sp = _space(chart, space)
    return wedge(PolyForm.d(sp, "theta1"), PolyForm.d(sp, "theta2"))


def torus_area_form(chart: ManifoldChart, space: Optional[FormSpace] = None) -> PolyForm:
    """Area form ``σ`` of the ``T^2`` factor used in the weak filling ``W × T^2``.

    It is chosen so that ``α' ∧ dα' ∧ σ`` and ``α ∧ dα^2`` induce the same
    orientation. For the open book form this is ``dθ2 ∧ dθ1``: with
    ``dθ1 ∧ dθ2`` the two volume forms have opposite signs everywhere.
    """
    return -dtheta12(chart, space)


def cosphere_form(d: int) -> tuple[ManifoldChart, PolyForm]:
    """``Σ x_i dθ_i`` on the cosphere bundle ``T^d × S^{d-1}``."""
    chart = ManifoldChart.tk_sphere(d, d)
    return chart, beta(chart)


NAMED_FORMS = ("beta", "alpha", "dtheta1")


def named_form(chart: ManifoldChart, name: str) -> PolyForm:
    """Resolve a form name against a chart: ``beta`` (TkSphere), ``alpha`` (T2S3),
    or the degenerate ``dtheta1``."""
    if name == "beta":
        return beta(chart)
    if name == "alpha":
        return alpha_open_book(chart)
    if name == "dtheta1":
        return PolyForm.d(chart.space, "theta1")
    raise InvalidInput(f"unknown form {name!r}; expected one of {', '.join(NAMED_FORMS)}")
