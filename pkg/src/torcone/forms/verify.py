"""Exact sampled and symbolic checks of contact and filling conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from ..errors import DegreeMismatch, InvalidInput, NoPositiveT, WeightMismatch
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
    restrict_to_frame,
    sample_points,
)
from .library import (
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

__all__ = [
    "VerificationReport",
    "contact_volume",
    "vanishes_on_chart",
    "verify_contact_condition",
    "standard_weights",
    "action_field",
    "moment_map",
    "verify_moment_image",
    "verify_strong_filling",
    "weak_fill_polynomial",
    "weak_fill_derivative",
    "weak_fill_identities",
    "verify_weak_fill",
    "T_EXPONENTS",
]

T_EXPONENTS = range(0, 21)


@dataclass
class VerificationReport:
    checked: int = 0
    witnesses: list = field(default_factory=list)
    min_margin: Optional[Fraction] = None
    identities: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return len(self.witnesses)

    @property
    def ok(self) -> bool:
        return not self.witnesses and all(r.is_zero() for r in self.identities.values())

    def record(self, p: SamplePoint, value: Fraction, passed: Optional[bool] = None) -> None:
        """Count one check; by default it passes when ``value > 0``."""
        self.checked += 1
        if self.min_margin is None or value < self.min_margin:
            self.min_margin = value
        if not (value > 0 if passed is None else passed):
            self.witnesses.append(p)

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Combine reports of disjoint sample batches."""
        margins = [m for m in (self.min_margin, other.min_margin) if m is not None]
        return VerificationReport(
            self.checked + other.checked,
            self.witnesses + other.witnesses,
            min(margins) if margins else None,
            {**self.identities, **other.identities},
        )


def contact_volume(form: PolyForm) -> PolyForm:
    """``α ∧ (dα)^{d-1}`` for a 1-form on a ``(2d-1)``-manifold chart."""
    if form.degree != 1:
        raise DegreeMismatch("contact forms are 1-forms")
    n = form.space.n - 1
    if n % 2 == 0:
        raise InvalidInput("contact manifolds are odd dimensional")
    return wedge(form, wedge_power(exterior_derivative(form), (n - 1) // 2))


def vanishes_on_chart(chart: ManifoldChart, form: PolyForm) -> PolyForm:
    """Residual ``form ∧ dg`` for the sphere constraint ``g``.

    A zero residual means ``form`` restricts to zero on the manifold
    (``dg`` is nowhere zero there).
    """
    dg = exterior_derivative(PolyForm.function(form.space, chart.constraint(form.space)))
    return wedge(form, dg)


def verify_contact_condition(
    chart: ManifoldChart,
    form: Union[str, PolyForm],
    n: int,
    seed: int,
) -> VerificationReport:
    """Check ``α ∧ (dα)^{d-1} > 0`` exactly at ``n`` sampled frames."""
    if isinstance(form, str):
        form = named_form(chart, form)
    if form.space.coords != chart.space.coords:
        raise InvalidInput("form does not live on the chart")
    top = contact_volume(form)
    report = VerificationReport()
    for p in sample_points(chart, n, seed):
        report.record(p, evaluate_at_frame(top, p))
    return report


def standard_weights(chart: ManifoldChart) -> list[tuple[int, ...]]:
    """Weights of the standard torus action: one circle per angle and per ``z_j``;
    on ``T2S3`` the last circle rotates ``z_1, z_2`` together."""
    m = chart.circle_factors
    if chart.kind == "T2S3":
        return [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1)]
    return [tuple(int(i == j) for j in range(m)) for i in range(m)]


def action_field(chart: ManifoldChart, weight: Sequence[int], space: Optional[FormSpace] = None) -> VectorField:
    """Generator ``Σ w_l ∂/∂θ_l + Σ w_j (a_j ∂/∂b_j - b_j ∂/∂a_j)`` of a circle action."""
    weight = tuple(weight)
    if len(weight) != chart.circle_factors or not all(isinstance(w, int) for w in weight):
        raise WeightMismatch(
            f"weight {weight} must be {chart.circle_factors} integers for {chart.label()}"
        )
    sp = space or chart.space
    comps: dict = {}
    for th, w in zip(chart.thetas, weight):
        comps[th] = sp.poly(w)
    for (a, b), w in zip(chart.complex_pairs, weight[len(chart.thetas):]):
        comps[a] = sp.poly(b) * (-w)
        comps[b] = sp.poly(a) * w
    return VectorField(sp, comps)


def moment_map(
    chart: ManifoldChart,
    form: Union[str, PolyForm],
    weights: Optional[Sequence[Sequence[int]]] = None,
) -> Callable[[SamplePoint], tuple[Fraction, ...]]:
    """``p ↦ (α_p(X_1), ..., α_p(X_m))`` for the generators of the given weights."""
    if isinstance(form, str):
        form = named_form(chart, form)
    if form.degree != 1:
        raise DegreeMismatch("moment maps are built from 1-forms")
    weights = standard_weights(chart) if weights is None else list(weights)
    if not weights:
        raise WeightMismatch("at least one action weight is required")
    comps = []
    for w in weights:
        f = interior_product(action_field(chart, w, form.space), form)
        comps.append(f.components.get((), form.space.poly(0)))
    names = form.space.coords

    def mu(p: SamplePoint) -> tuple[Fraction, ...]:
        vals = dict(zip(names, p.coords))
        return tuple(c.evaluate(vals) for c in comps)

    return mu


def verify_moment_image(kind: str, d: int, k: Optional[int], n: int, seed: int) -> VerificationReport:
    """Check the moment image at ``n`` samples.

    ``beta``: ``μ`` of ``β_k`` lies in ``{y_{k+1}, ..., y_d >= 0}``; the margin
    is the smallest of those coordinates. ``cosphere``: ``‖μ‖ = 1`` for
    ``Σ x_i dθ_i`` on ``T^d × S^{d-1}``; the margin is ``‖μ‖^2``.
    """
    if kind == "beta":
        if k is None:
            raise InvalidInput("beta moment map needs k")
        chart = ManifoldChart.tk_sphere(d, k)
        form = beta(chart)
    elif kind == "cosphere":
        chart, form = cosphere_form(d)
    else:
        raise InvalidInput(f"unknown moment check {kind!r}; expected beta or cosphere")
    mu = moment_map(chart, form)
    report = VerificationReport()
    for p in sample_points(chart, n, seed):
        y = mu(p)
        if kind == "beta":
            tail = y[len(chart.thetas):]
            margin = min(tail) if tail else Fraction(0)
            report.record(p, margin, all(v >= 0 for v in tail))
        else:
            norm2 = sum(v * v for v in y)
            report.record(p, norm2, norm2 == 1)
    return report


def verify_strong_filling(d: int, k: int) -> VerificationReport:
    """Exact identities for the filling ``(T^k × D^{2d-k}, ω, X)`` of ``β_k``:
    ``dω = 0``, ``d(ι_X ω) = ω`` and ``ι_X ω = β_k``."""
    chart = ManifoldChart.tk_sphere(d, k)
    omega = filling_form(chart)
    x = liouville_field(chart)
    lam = interior_product(x, omega)
    report = VerificationReport(checked=3)
    report.identities = {
        "d omega": exterior_derivative(omega),
        "d(i_X omega) - omega": exterior_derivative(lam) - omega,
        "i_X omega - beta_k": lam - beta(chart),
    }
    return report


_T2S3 = ManifoldChart.t2s3()


@lru_cache(maxsize=None)
def _weak_fill_forms() -> dict:
    """Symbolic forms of the weak filling of ``T^2 × S^3`` over params ``t, tau``."""
    sp = _T2S3.space.with_params(("t", "tau"))
    at = alpha_t(_T2S3, "t", sp)
    dat = exterior_derivative(at)
    ap = alpha_prime(_T2S3, sp)
    omega = exterior_derivative(ap)
    sigma = torus_area_form(_T2S3, sp)
    tau = sp.poly("tau")
    p = wedge(at, wedge_power(omega + sigma + dat * tau, 2))
    return {
        "space": sp,
        "alpha_t": at,
        "d alpha_t": dat,
        "alpha'": ap,
        "omega": omega,
        "sigma": sigma,
        "P": p,
        "dP": p.param_derivative("tau"),
    }


def weak_fill_polynomial(t=None, tau=None) -> PolyForm:
    """``P_t(τ) = α_t ∧ (ω + σ + τ dα_t)^2`` on ``T^2 × S^3`` with ``ω = dα'``.

    ``t`` and ``tau`` may be numbers; a parameter left as ``None`` stays symbolic.
    """
    return _fix(_weak_fill_forms()["P"], t, tau)


def weak_fill_derivative(t=None, tau=None) -> PolyForm:
    """Symbolic ``dP_t/dτ``, optionally evaluated at ``t`` and ``tau``."""
    return _fix(_weak_fill_forms()["dP"], t, tau)


def _fix(form: PolyForm, t, tau) -> PolyForm:
    values = {}
    if t is not None:
        values["t"] = Fraction(t)
    if tau is not None:
        values["tau"] = Fraction(tau)
    return form.substitute(values) if values else form


def weak_fill_identities() -> dict[str, PolyForm]:
    """Residuals of the weak-fill identities; all are zero when they hold.

    ``P_t(0) = 2 α' ∧ ω ∧ σ`` and the expanded derivative hold after
    restriction to ``T^2 × S^3`` (residual ``∧ dg``); the three-term
    derivative formula holds in the ambient space.
    """
    f = _weak_fill_forms()
    sp = f["space"]
    at, dat, ap, omega, sigma = f["alpha_t"], f["d alpha_t"], f["alpha'"], f["omega"], f["sigma"]
    tau = sp.poly("tau")
    t = sp.poly("t")
    p0 = f["P"].map_coefficients(lambda c: c.substitute({"tau": 0}).with_variables(sp.variables))
    three_term = (
        wedge(at, wedge_power(dat, 2)) * (tau * 2)
        + wedge(wedge(at, dat), sigma) * 2
        + wedge(wedge(at, omega), dat) * 2
    )
    g1 = f1(_T2S3, sp).components[()]
    g2 = f2(_T2S3, sp).components[()]
    dg1 = exterior_derivative(f1(_T2S3, sp))
    dg2 = exterior_derivative(f2(_T2S3, sp))
    # relabelling θ1 <-> θ2 (σ = dθ2 ∧ dθ1) swaps the roles of f1 and f2
    cross = dg2 * g1 - dg1 * g2
    expanded = (
        wedge(at, wedge_power(dat, 2)) * (tau * 2)
        + wedge(wedge(ap, exterior_derivative(ap)), sigma) * 2
        + wedge(wedge(cross, omega), sigma) * (t * t * 2)
    )
    return {
        "P(0) - 2 alpha' ^ omega ^ sigma": vanishes_on_chart(_T2S3, p0 - wedge(wedge(ap, omega), sigma) * 2),
        "dP/dtau - three-term formula": f["dP"] - three_term,
        "dP/dtau - expanded formula": vanishes_on_chart(_T2S3, f["dP"] - expanded),
    }


def verify_weak_fill(
    n: int, tau_grid: Sequence, seed: int
) -> tuple[Fraction, VerificationReport]:
    """Find ``t* = 2^-m`` (largest, ``m ≤ 20``) with ``dP_t/dτ > 0`` at all
    samples and grid points, then report positivity of ``dP/dτ`` and ``P``."""
    grid = [Fraction(x) for x in tau_grid]
    if not grid:
        raise InvalidInput("tau grid is empty")
    if any(x < 0 for x in grid):
        raise InvalidInput("tau grid values must be nonnegative")
    f = _weak_fill_forms()
    points = sample_points(_T2S3, n, seed)
    polys = [(p, restrict_to_frame(f["dP"], p), restrict_to_frame(f["P"], p)) for p in points]

    def derivative_positive(t: Fraction) -> bool:
        return all(
            dp.evaluate({"t": t, "tau": tau}) > 0 for _, dp, _ in polys for tau in grid
        )

    t_star = next((Fraction(1, 2**m) for m in T_EXPONENTS if derivative_positive(Fraction(1, 2**m))), None)
    if t_star is None:
        raise NoPositiveT("no t in {1, 1/2, ..., 2^-20} makes dP/dtau positive on the samples")
    report = VerificationReport(identities=weak_fill_identities())
    for p, dp, pp in polys:
        for tau in grid:
            vals = {"t": t_star, "tau": tau}
            v = min(dp.evaluate(vals), pp.evaluate(vals))
            report.record(p, v)
    # a point failing at several grid values is one witness
    report.witnesses = list(dict.fromkeys(report.witnesses))
    return t_star, report
