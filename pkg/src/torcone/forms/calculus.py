"""Differential forms with polynomial coefficients on a coordinate space.

A :class:`FormSpace` names the ambient coordinates (those that carry a
differential) and any extra symbolic parameters. Coefficients are
:class:`Poly` objects over ``coords + params``, so a form may depend
polynomially on parameters such as a deformation parameter, and derivatives
with respect to a parameter are taken coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from ..errors import InvalidInput, VariableMismatch
from .poly import Poly, Scalar

__all__ = [
    "FormSpace",
    "PolyForm",
    "VectorField",
    "wedge",
    "wedge_power",
    "exterior_derivative",
    "interior_product",
]


@dataclass(frozen=True)
class FormSpace:
    coords: tuple[str, ...]
    params: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "params", tuple(self.params))
        names = self.coords + self.params
        if len(set(names)) != len(names):
            raise InvalidInput(f"duplicate names in {names}")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.coords + self.params

    @property
    def n(self) -> int:
        return len(self.coords)

    def index(self, coord: str) -> int:
        try:
            return self.coords.index(coord)
        except ValueError:
            raise InvalidInput(f"{coord!r} is not a coordinate of {self.coords}") from None

    def poly(self, expr: Union[str, Scalar, Poly]) -> Poly:
        """Coerce a variable name, number or polynomial into this space."""
        if isinstance(expr, Poly):
            if expr.variables != self.variables:
                return expr.with_variables(self.variables)
            return expr
        if isinstance(expr, str):
            return Poly.var(self.variables, expr)
        return Poly.constant(self.variables, expr)

    def with_params(self, params: Sequence[str]) -> FormSpace:
        return FormSpace(self.coords, tuple(params))


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``idx`` (0 if an index repeats)."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1) ** inv, tuple(sorted(idx))


class PolyForm:
    """A ``degree``-form ``sum_I c_I dx_I`` with increasing index tuples ``I``."""

    __slots__ = ("space", "degree", "components")

    def __init__(self, space: FormSpace, degree: int, components: Mapping[tuple[int, ...], Poly] | None = None):
        self.space = space
        self.degree = degree
        clean = {}
        for idx, c in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or list(idx) != sorted(set(idx)):
                raise InvalidInput(f"index {idx} is not a strictly increasing {degree}-tuple")
            if idx and (idx[0] < 0 or idx[-1] >= space.n):
                raise InvalidInput(f"index {idx} out of range")
            c = space.poly(c)
            if c:
                clean[idx] = c
        self.components = clean

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, space: FormSpace, degree: int) -> PolyForm:
        return cls(space, degree)

    @classmethod
    def function(cls, space: FormSpace, f: Union[str, Scalar, Poly]) -> PolyForm:
        return cls(space, 0, {(): space.poly(f)})

    @classmethod
    def d(cls, space: FormSpace, coord: str) -> PolyForm:
        """The coordinate differential ``d coord``."""
        return cls(space, 1, {(space.index(coord),): 1})

    @classmethod
    def volume(cls, space: FormSpace) -> PolyForm:
        return cls(space, space.n, {tuple(range(space.n)): 1})

    # algebra ------------------------------------------------------------
    def _check(self, other: PolyForm) -> None:
        if self.space != other.space:
            raise VariableMismatch(f"{self.space} vs {other.space}")

    def is_zero(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (
            self.space == other.space
            and (self.degree == other.degree or (not self.components and not other.components))
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.components.items())))

    def __add__(self, other: PolyForm) -> PolyForm:
        if not isinstance(other, PolyForm):
            return NotImplemented
        self._check(other)
        if self.degree != other.degree:
            if not other.components:
                return self
            if not self.components:
                return other
            raise InvalidInput(f"cannot add a {self.degree}-form and a {other.degree}-form")
        out = dict(self.components)
        for idx, c in other.components.items():
            s = out[idx] + c if idx in out else c
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return PolyForm._raw(self.space, self.degree, out)

    def __neg__(self) -> PolyForm:
        return PolyForm._raw(self.space, self.degree, {i: -c for i, c in self.components.items()})

    def __sub__(self, other: PolyForm) -> PolyForm:
        return self + (-other)

    def __mul__(self, f) -> PolyForm:
        """Multiply by a number or a polynomial function."""
        if isinstance(f, PolyForm):
            return NotImplemented
        if isinstance(f, (int, Fraction)):
            if not f:
                return PolyForm.zero(self.space, self.degree)
            return PolyForm._raw(self.space, self.degree, {i: c * f for i, c in self.components.items()})
        f = self.space.poly(f)
        out = {}
        for i, c in self.components.items():
            p = c * f
            if p:
                out[i] = p
        return PolyForm._raw(self.space, self.degree, out)

    __rmul__ = __mul__

    def __xor__(self, other: PolyForm) -> PolyForm:
        return wedge(self, other)

    @classmethod
    def _raw(cls, space, degree, components) -> PolyForm:
        f = cls.__new__(cls)
        f.space, f.degree, f.components = space, degree, components
        return f

    def map_coefficients(self, fn) -> PolyForm:
        out = {}
        for i, c in self.components.items():
            p = fn(c)
            if p:
                out[i] = p
        return PolyForm._raw(self.space, self.degree, out)

    def param_derivative(self, param: str) -> PolyForm:
        """Coefficientwise derivative with respect to a symbolic parameter."""
        if param not in self.space.params:
            raise InvalidInput(f"{param!r} is not a parameter of {self.space}")
        k = self.space.variables.index(param)
        return self.map_coefficients(lambda c: c.diff(k))

    def substitute(self, values: Mapping[str, Scalar]) -> PolyForm:
        """Fix some parameters to numbers; they leave the form's space."""
        for v in values:
            if v not in self.space.params:
                raise InvalidInput(f"{v!r} is not a parameter of {self.space}")
        space = self.space.with_params([p for p in self.space.params if p not in values])
        out = {}
        for i, c in self.components.items():
            p = c.substitute(values)
            if p:
                out[i] = p
        return PolyForm._raw(space, self.degree, out)

    def with_space(self, space: FormSpace) -> PolyForm:
        """Re-express in a space with the same coordinates and more parameters."""
        if space.coords != self.space.coords:
            raise VariableMismatch("coordinates differ")
        return PolyForm(space, self.degree, {i: c.with_variables(space.variables) for i, c in self.components.items()})

    def __repr__(self) -> str:
        if not self.components:
            return f"0 ({self.degree}-form)"
        parts = []
        for idx in sorted(self.components):
            basis = "∧".join("d" + self.space.coords[i] for i in idx) or "1"
            parts.append(f"({self.components[idx]})·{basis}")
        return " + ".join(parts)


def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    a._check(b)
    out: dict = {}
    for i, p in a.components.items():
        for j, q in b.components.items():
            sign, idx = _sort_sign(i + j)
            if not sign:
                continue
            term = p * q
            if sign < 0:
                term = -term
            if idx in out:
                s = out[idx] + term
                if s:
                    out[idx] = s
                else:
                    del out[idx]
            elif term:
                out[idx] = term
    return PolyForm._raw(a.space, a.degree + b.degree, out)


def wedge_power(a: PolyForm, n: int) -> PolyForm:
    out = PolyForm.function(a.space, 1)
    for _ in range(n):
        out = wedge(out, a)
    return out


def exterior_derivative(a: PolyForm) -> PolyForm:
    """``d(c dx_I) = sum_j dc/dx_j dx_j ∧ dx_I`` over the coordinates only."""
    out: dict = {}
    for idx, c in a.components.items():
        for j in range(a.space.n):
            if j in idx:
                continue
            dc = c.diff(j)
            if not dc:
                continue
            sign, new = _sort_sign((j,) + idx)
            term = dc if sign > 0 else -dc
            if new in out:
                s = out[new] + term
                if s:
                    out[new] = s
                else:
                    del out[new]
            else:
                out[new] = term
    return PolyForm._raw(a.space, a.degree + 1, out)


class VectorField:
    """``sum_j X_j d/dx_j`` with polynomial components over a form space."""

    __slots__ = ("space", "components")

    def __init__(self, space: FormSpace, components: Mapping[str, Union[str, Scalar, Poly]]):
        self.space = space
        clean = {}
        for name, c in components.items():
            c = space.poly(c)
            if c:
                clean[space.index(name)] = c
        self.components = clean

    @classmethod
    def from_vector(cls, space: FormSpace, v: Sequence[Scalar]) -> VectorField:
        if len(v) != space.n:
            raise InvalidInput("vector length does not match coordinates")
        return cls(space, {name: Fraction(x) for name, x in zip(space.coords, v)})

    def __add__(self, other: VectorField) -> VectorField:
        if self.space != other.space:
            raise VariableMismatch("vector fields live in different spaces")
        comps = {self.space.coords[i]: c for i, c in self.components.items()}
        for i, c in other.components.items():
            name = self.space.coords[i]
            comps[name] = comps[name] + c if name in comps else c
        return VectorField(self.space, comps)

    def __mul__(self, f) -> VectorField:
        f = self.space.poly(f)
        return VectorField(self.space, {self.space.coords[i]: c * f for i, c in self.components.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.space == other.space and self.components == other.components

    def __repr__(self) -> str:
        return " + ".join(
            f"({c})·∂{self.space.coords[i]}" for i, c in sorted(self.components.items())
        ) or "0"


def interior_product(x: VectorField, a: PolyForm) -> PolyForm:
    """``ι_X(c dx_{i0} ∧ ... ) = sum_r (-1)^r X_{i_r} c dx_{I minus i_r}``."""
    if x.space != a.space:
        raise VariableMismatch(f"{x.space} vs {a.space}")
    if a.degree == 0:
        return PolyForm.zero(a.space, 0)
    out: dict = {}
    for idx, c in a.components.items():
        for r, i in enumerate(idx):
            xi = x.components.get(i)
            if xi is None:
                continue
            term = c * xi
            if r % 2:
                term = -term
            rest = idx[:r] + idx[r + 1 :]
            if rest in out:
                s = out[rest] + term
                if s:
                    out[rest] = s
                else:
                    del out[rest]
            elif term:
                out[rest] = term
    return PolyForm._raw(a.space, a.degree - 1, out)


def forms_sum(forms: Iterable[PolyForm]) -> PolyForm:
    forms = list(forms)
    out = forms[0]
    for f in forms[1:]:
        out = out + f
    return out
