"""Complex-valued forms over a real coordinate space.

Complex coordinates are realified as ``z = a + i b``. A :class:`CForm` is a
pair of real forms ``re + i im``; writing expressions in ``z``, ``z̄``, ``dz``
and ``dz̄`` and calling :meth:`CForm.real` yields the real-coefficient form,
raising if an imaginary part survives.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from ..errors import InvalidInput
from .calculus import FormSpace, PolyForm, VectorField, exterior_derivative, wedge

Number = Union[int, Fraction]


class CForm:
    __slots__ = ("re", "im")

    def __init__(self, re: PolyForm, im: PolyForm | None = None):
        self.re = re
        self.im = im if im is not None else PolyForm.zero(re.space, re.degree)

    @property
    def space(self) -> FormSpace:
        return self.re.space

    @classmethod
    def const(cls, space: FormSpace, re: Number = 0, im: Number = 0) -> CForm:
        return cls(PolyForm.function(space, re), PolyForm.function(space, im))

    @classmethod
    def real_form(cls, f: PolyForm) -> CForm:
        return cls(f)

    @classmethod
    def z(cls, space: FormSpace, a: str, b: str) -> CForm:
        return cls(PolyForm.function(space, a), PolyForm.function(space, b))

    def conj(self) -> CForm:
        return CForm(self.re, -self.im)

    def d(self) -> CForm:
        return CForm(exterior_derivative(self.re), exterior_derivative(self.im))

    def __add__(self, other: CForm) -> CForm:
        return CForm(self.re + other.re, self.im + other.im)

    def __neg__(self) -> CForm:
        return CForm(-self.re, -self.im)

    def __sub__(self, other: CForm) -> CForm:
        return self + (-other)

    def __mul__(self, other) -> CForm:
        """Wedge product (which is ordinary product for functions)."""
        if isinstance(other, (int, Fraction)):
            return CForm(self.re * other, self.im * other)
        return CForm(
            wedge(self.re, other.re) - wedge(self.im, other.im),
            wedge(self.re, other.im) + wedge(self.im, other.re),
        )

    def __rmul__(self, other) -> CForm:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def real(self) -> PolyForm:
        if self.im:
            raise InvalidInput(f"form has a nonzero imaginary part: {self.im}")
        return self.re


def i_times(c: Number, f: CForm) -> CForm:
    """``(c i) f`` for a rational ``c``."""
    return CForm(-(f.im * c), f.re * c)


def realify_vector_field(
    space: FormSpace,
    real_part: Mapping[str, object],
    holomorphic: Mapping[tuple[str, str], tuple[CForm, CForm]],
) -> VectorField:
    """Real vector field from ``sum u ∂/∂x + sum (v ∂/∂z + w ∂/∂z̄)``.

    ``holomorphic`` maps each coordinate pair ``(a, b)`` of ``z = a + i b`` to
    the function coefficients ``(v, w)``. With ``∂/∂z = (∂a - i ∂b)/2`` and
    ``∂/∂z̄ = (∂a + i ∂b)/2`` the real components are ``(v + w)/2`` on ``∂a``
    and ``i (w - v)/2`` on ``∂b``; both must be real.
    """
    comps = dict(real_part)
    half = Fraction(1, 2)
    for (a, b), (v, w) in holomorphic.items():
        if v.re.degree or w.re.degree:
            raise InvalidInput("vector field coefficients must be functions")
        ca = ((v + w) * half).real()
        cb = i_times(half, w - v).real()
        comps[a] = ca.components.get((), 0)
        comps[b] = cb.components.get((), 0)
    return VectorField(space, comps)
