"""Product charts ``T^m × S^n``, exact rational sample points and tangent frames."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from ..errors import DegreeMismatch, InvalidInput, VariableMismatch
from .calculus import FormSpace, PolyForm, wedge
from .poly import Poly, Scalar

__all__ = [
    "ManifoldChart",
    "SamplePoint",
    "sample_points",
    "tangent_frame",
    "evaluate_at_frame",
    "evaluate_on_vectors",
    "restrict_to_frame",
]


@dataclass(frozen=True)
class ManifoldChart:
    """``TkSphere(d, k)``: ``T^k × S^{2d-k-1}`` inside ``T^k × R^k × C^{d-k}``;
    ``T2S3``: ``T^2 × S^3`` inside ``T^2 × C^2``.

    Ambient coordinates are the angles ``theta*`` followed by the real sphere
    coordinates ``x*`` and ``a*, b*`` (with ``z_j = a_j + i b_j``). The sphere
    factor is the unit sphere in the non-angle coordinates.
    """

    kind: str
    d: int
    k: int

    def __post_init__(self):
        if self.kind == "TkSphere":
            if not (isinstance(self.d, int) and isinstance(self.k, int) and 1 <= self.k <= self.d):
                raise InvalidInput(f"TkSphere needs 1 <= k <= d, got d={self.d}, k={self.k}")
        elif self.kind == "T2S3":
            if (self.d, self.k) != (3, 2):
                raise InvalidInput("T2S3 chart has d = 3 and two angle coordinates")
        else:
            raise InvalidInput(f"unknown chart kind {self.kind!r}")

    @classmethod
    def tk_sphere(cls, d: int, k: int) -> ManifoldChart:
        return cls("TkSphere", d, k)

    @classmethod
    def t2s3(cls) -> ManifoldChart:
        return cls("T2S3", 3, 2)

    @property
    def thetas(self) -> tuple[str, ...]:
        return tuple(f"theta{l}" for l in range(1, self.k + 1))

    @property
    def reals(self) -> tuple[str, ...]:
        if self.kind == "T2S3":
            return ()
        return tuple(f"x{l}" for l in range(1, self.k + 1))

    @property
    def complex_pairs(self) -> tuple[tuple[str, str], ...]:
        m = 2 if self.kind == "T2S3" else self.d - self.k
        return tuple((f"a{j}", f"b{j}") for j in range(1, m + 1))

    @property
    def sphere_coords(self) -> tuple[str, ...]:
        return self.reals + tuple(c for pair in self.complex_pairs for c in pair)

    @property
    def space(self) -> FormSpace:
        return FormSpace(self.thetas + self.sphere_coords)

    @property
    def manifold_dim(self) -> int:
        return len(self.thetas) + len(self.sphere_coords) - 1

    @property
    def torus_dim(self) -> int:
        return self.d

    @property
    def circle_factors(self) -> int:
        """Number of weight entries of a circle action: one per angle, one per ``z_j``."""
        return len(self.thetas) + len(self.complex_pairs)

    def label(self) -> str:
        if self.kind == "T2S3":
            return "T^2 × S^3"
        return f"T^{self.k} × S^{2 * self.d - self.k - 1}"

    def constraint(self, space: Optional[FormSpace] = None) -> Poly:
        """``g = sum (sphere coordinate)^2 - 1``; the manifold is ``g = 0``."""
        space = space or self.space
        g = space.poly(-1)
        for c in self.sphere_coords:
            v = space.poly(c)
            g = g + v * v
        return g

    def orientation_form(self) -> PolyForm:
        """Constant top form ``Ω``; a tangent frame ``F`` is positive iff
        ``Ω(n, F) > 0`` for the outward sphere normal ``n``.

        For ``TkSphere`` this is the symplectic volume of the filling
        ``T^k × D``: ``∧ (dx_l ∧ dθ_l) ∧ ∧ (da_j ∧ db_j)``. For ``T2S3`` it is
        the boundary orientation of ``C^2`` followed by ``dθ1 ∧ dθ2``, which
        is the orientation in which the open book form ``α`` has
        ``α ∧ dα^2 > 0``.
        """
        sp = self.space
        d = lambda c: PolyForm.d(sp, c)  # noqa: E731
        if self.kind == "T2S3":
            s3 = wedge(wedge(d("a1"), d("b1")), wedge(d("a2"), d("b2")))
            return wedge(s3, wedge(d("theta1"), d("theta2")))
        out = PolyForm.function(sp, 1)
        for x, th in zip(self.reals, self.thetas):
            out = wedge(out, wedge(d(x), d(th)))
        for a, b in self.complex_pairs:
            out = wedge(out, wedge(d(a), d(b)))
        return out


@dataclass(frozen=True)
class SamplePoint:
    coords: tuple[Fraction, ...]
    frame: tuple[tuple[Fraction, ...], ...]

    def values(self, space: FormSpace) -> dict[str, Fraction]:
        if len(self.coords) != space.n:
            raise VariableMismatch("sample point does not match form coordinates")
        return dict(zip(space.coords, self.coords))


def _det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in rows]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        pv = a[c][c]
        out *= pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                row_c = a[c]
                a[i] = [x - f * y for x, y in zip(a[i], row_c)]
    return out * sign


@lru_cache(maxsize=200_000)
def _minor(vectors: tuple[tuple[Fraction, ...], ...], idx: tuple[int, ...]) -> Fraction:
    return _det([[v[i] for i in idx] for v in vectors])


def evaluate_on_vectors(
    form: PolyForm,
    point: Sequence[Scalar],
    vectors: Sequence[Sequence[Scalar]],
    params: Optional[Mapping[str, Scalar]] = None,
) -> Fraction:
    """Value of ``form`` at ``point`` on the ordered ambient ``vectors``."""
    if form.degree != len(vectors):
        raise DegreeMismatch(f"{form.degree}-form evaluated on {len(vectors)} vectors")
    space = form.space
    vals = dict(zip(space.coords, (Fraction(x) for x in point)))
    vals.update({k: Fraction(v) for k, v in (params or {}).items()})
    vecs = tuple(tuple(Fraction(x) for x in v) for v in vectors)
    total = Fraction(0)
    for idx, c in form.components.items():
        m = _minor(vecs, idx)
        if m:
            total += c.evaluate(vals) * m
    return total


def restrict_to_frame(form: PolyForm, p: SamplePoint) -> Poly:
    """Value at the sample frame as a polynomial in the form's parameters."""
    if form.degree != len(p.frame):
        raise DegreeMismatch(f"{form.degree}-form evaluated on a frame of {len(p.frame)} vectors")
    space = form.space
    vals = p.values(space)
    out = Poly.constant(space.params, 0)
    for idx, c in form.components.items():
        m = _minor(p.frame, idx)
        if m:
            out = out + c.substitute(vals) * m
    return out


def evaluate_at_frame(
    form: PolyForm, p: SamplePoint, params: Optional[Mapping[str, Scalar]] = None
) -> Fraction:
    """Exact value of the alternating form on the ordered tangent frame."""
    poly = restrict_to_frame(form, p)
    if poly.variables:
        poly = poly.substitute(dict(params or {}))
    return poly.constant_value()


def _random_rational(rng: random.Random, num: int, den: int) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def _sphere_point(rng: random.Random, m: int) -> list[Fraction]:
    """Rational point on the unit sphere in R^m via inverse stereographic
    projection, with a random choice of pole axis and sign."""
    u = [_random_rational(rng, 12, 12) for _ in range(m - 1)]
    s = sum(x * x for x in u)
    pt = [2 * x / (s + 1) for x in u] + [(s - 1) / (s + 1)]
    axis = rng.randrange(m)
    pt[axis], pt[-1] = pt[-1], pt[axis]
    if rng.random() < 0.5:
        pt[axis] = -pt[axis]
    return pt


def tangent_frame(chart: ManifoldChart, coords: Sequence[Fraction]) -> tuple[tuple[Fraction, ...], ...]:
    """Ordered tangent frame at a point of the chart.

    Coordinate directions are projected against the sphere normal, the
    direction most aligned with the normal is dropped, and the last vector is
    negated if needed so the frame is positive for the chart orientation.
    """
    space = chart.space
    coords = tuple(Fraction(x) for x in coords)
    sphere = set(chart.sphere_coords)
    normal = tuple(x if name in sphere else Fraction(0) for name, x in zip(space.coords, coords))
    nn = sum(x * x for x in normal)
    if nn == 0:
        raise InvalidInput("point is not on the sphere factor")
    drop = max(range(len(normal)), key=lambda j: (abs(normal[j]), -j))
    frame = []
    for j in range(len(normal)):
        if j == drop:
            continue
        f = normal[j] / nn
        frame.append(tuple(Fraction(int(i == j)) - f * normal[i] for i in range(len(normal))))
    sign = evaluate_on_vectors(chart.orientation_form(), coords, (normal,) + tuple(frame))
    if sign < 0:
        frame[-1] = tuple(-x for x in frame[-1])
    return tuple(frame)


def sample_points(chart: ManifoldChart, n: int, seed: int) -> list[SamplePoint]:
    """``n`` distinct exact points of the chart with oriented tangent frames."""
    if n < 1:
        raise InvalidInput("need at least one sample")
    rng = random.Random(seed)
    m = len(chart.sphere_coords)
    seen = set()
    out = []
    while len(out) < n:
        thetas = [_random_rational(rng, 7, 4) for _ in chart.thetas]
        coords = tuple(thetas + _sphere_point(rng, m))
        if coords in seen:
            continue
        seen.add(coords)
        out.append(SamplePoint(coords, tangent_frame(chart, coords)))
    return out
