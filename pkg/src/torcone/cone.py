"""Rational polyhedral cones.

A :class:`Cone` is stored by primitive integer generators, primitive inward
facet normals, or both. Conversions between the two go through an exact
incremental double-description routine. An implicit equation ``n . x = 0`` of
a lower-dimensional cone shows up as the pair ``+n, -n`` among the normals,
and a lineality direction ``l`` shows up as ``+l, -l`` among the generators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateInput,
    DimensionCapExceeded,
    EmptyFacetSet,
    InvalidInput,
    NotApplicable,
    NotStrictlyConvex,
    NotUnimodular,
    ZeroReeb,
)
from .lattice import (
    IntVector,
    UnimodularWitness,
    det,
    mat_vec,
    primitive,
    smith_normal_form,
    vec_mat,
)

DEFAULT_DIM_CAP = 6

__all__ = [
    "Cone",
    "LinealityReport",
    "StandardFormWitness",
    "SlicePolytope",
    "dim_cap",
    "dual_description",
    "lineality",
    "is_strictly_convex",
    "is_whole_space",
    "is_full_dimensional",
    "normalize_to_standard",
    "reeb_vector",
    "slice_cone",
    "transform",
    "standard_cone",
]


def dim_cap() -> int:
    """Largest dimension handled by the double-description routine."""
    raw = os.environ.get("TORCONE_DIM_CAP")
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"TORCONE_DIM_CAP must be an integer, got {raw!r}") from None


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def _canonical(vectors: Iterable[Sequence], dim: int) -> tuple[IntVector, ...]:
    seen = set()
    for v in vectors:
        if len(v) != dim:
            raise InvalidInput(f"vector {tuple(v)} does not have dimension {dim}")
        p = primitive(v)
        if any(p):
            seen.add(p)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone in R^dim.

    ``generators`` are rays whose nonnegative span is the cone;
    ``facet_normals`` are inward normals ``n`` with the cone equal to
    ``{x : n . x >= 0}``. ``None`` means that description is absent; an empty
    tuple of normals is the whole space, an empty tuple of generators the
    origin. Vectors are made primitive, deduplicated and sorted.
    """

    dim: int
    generators: Optional[tuple[IntVector, ...]] = None
    facet_normals: Optional[tuple[IntVector, ...]] = None

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidInput(f"cone dimension must be a positive integer, got {self.dim!r}")
        if self.generators is None and self.facet_normals is None:
            raise InvalidInput("a cone needs generators or facet normals")
        if self.generators is not None:
            object.__setattr__(self, "generators", _canonical(self.generators, self.dim))
        if self.facet_normals is not None:
            object.__setattr__(self, "facet_normals", _canonical(self.facet_normals, self.dim))
        if self.generators is not None and self.facet_normals is not None:
            for g in self.generators:
                for n in self.facet_normals:
                    if _dot(g, n) < 0:
                        raise InvalidInput(f"generator {g} violates facet normal {n}")

    def contains(self, x: Sequence) -> bool:
        """Exact membership test via the facet description."""
        return all(_dot(n, x) >= 0 for n in _geometry(self).normals)


@dataclass(frozen=True)
class _Geometry:
    lineality: tuple[IntVector, ...]  # vector-space basis of cone ∩ -cone
    rays: tuple[IntVector, ...]  # extreme rays modulo lineality
    inequalities: tuple[IntVector, ...]  # facet normals
    equations: tuple[IntVector, ...]  # basis of the orthogonal complement of the span

    @property
    def normals(self) -> tuple[IntVector, ...]:
        return tuple(self.inequalities) + tuple(self.equations) + tuple(
            tuple(-x for x in v) for v in self.equations
        )


def _double_description(constraints: Sequence[IntVector], dim: int):
    """Generators of ``{x : a . x >= 0 for a in constraints}``.

    Returns ``(lineality_basis, rays)``. Starts from the whole space and
    intersects one half-space at a time. While the current lineality space is
    not orthogonal to a constraint, the constraint cuts the lineality space
    instead of the rays. Otherwise new rays come from adjacent pairs of
    rays on opposite sides, adjacency being the combinatorial zero-set test.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[IntVector, frozenset]] = []
    processed: set[int] = set()
    for idx, a in enumerate(constraints):
        if not any(a):
            continue
        pivot = next((l for l in lin if _dot(a, l) != 0), None)
        if pivot is not None:
            s = _dot(a, pivot)
            if s < 0:
                pivot, s = tuple(-x for x in pivot), -s
            new_lin = []
            for l in lin:
                al = _dot(a, l)
                w = tuple(s * x - al * y for x, y in zip(l, pivot))
                if any(w):
                    new_lin.append(primitive(w))
            # the pivot itself projects to zero and drops out above
            new_rays = []
            for r, z in rays:
                ar = _dot(a, r)
                w = primitive(tuple(s * x - ar * y for x, y in zip(r, pivot)))
                new_rays.append((w, z | {idx}))
            new_rays.append((primitive(pivot), frozenset(processed)))
            lin, rays = new_lin, new_rays
        else:
            pos, neg, new_rays = [], [], []
            for r, z in rays:
                ar = _dot(a, r)
                if ar > 0:
                    pos.append((r, z, ar))
                    new_rays.append((r, z))
                elif ar < 0:
                    neg.append((r, z, ar))
                else:
                    new_rays.append((r, z | {idx}))
            for p, zp, ap in pos:
                for n, zn, an in neg:
                    common = zp & zn
                    if any(common <= z for r, z in rays if r != p and r != n):
                        continue
                    w = primitive(tuple(ap * x - an * y for x, y in zip(n, p)))
                    new_rays.append((w, common | {idx}))
            rays = new_rays
        processed.add(idx)
    return tuple(sorted(set(lin))), tuple(sorted({r for r, _ in rays}))


def _geometry(c: Cone) -> _Geometry:
    if c.dim > dim_cap():
        raise DimensionCapExceeded(f"dimension {c.dim} exceeds cap {dim_cap()}")
    return _geometry_cached(c)


@lru_cache(maxsize=4096)
def _geometry_cached(c: Cone) -> _Geometry:
    d = c.dim
    if c.generators is not None:
        if not c.generators:
            raise DegenerateInput("all generators are zero")
        eqs, ineqs = _double_description(c.generators, d)
        both = list(ineqs) + list(eqs) + [tuple(-x for x in v) for v in eqs]
        lin, rays = _double_description(both, d)
    else:
        lin, rays = _double_description(c.facet_normals, d)
        gens = list(rays) + list(lin) + [tuple(-x for x in v) for v in lin]
        if not gens:
            raise DegenerateInput("facet normals cut the cone down to the origin")
        eqs, ineqs = _double_description(gens, d)
    return _Geometry(lin, rays, ineqs, eqs)


def dual_description(c: Cone) -> Cone:
    """Return ``c`` with both descriptions populated, minimal and consistent."""
    g = _geometry(c)
    gens = list(g.rays) + list(g.lineality) + [tuple(-x for x in v) for v in g.lineality]
    return Cone(c.dim, generators=tuple(gens), facet_normals=g.normals)


@dataclass(frozen=True)
class LinealityReport:
    dimension: int
    lattice_basis: tuple[IntVector, ...]


def _integer_kernel(rows: Sequence[IntVector], dim: int) -> tuple[IntVector, ...]:
    """Z-basis of ``{x in Z^dim : r . x = 0 for every row}``, saturated."""
    if not rows:
        return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    s, _, v = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(s), dim)) if s[i][i] != 0)
    cols = list(zip(*v.matrix))
    return tuple(primitive(cols[j]) for j in range(r, dim))


def lineality(c: Cone) -> LinealityReport:
    """Largest linear subspace contained in the cone, with a saturated lattice basis."""
    basis = _integer_kernel(_geometry(c).normals, c.dim)
    return LinealityReport(len(basis), basis)


def is_strictly_convex(c: Cone) -> bool:
    return lineality(c).dimension == 0


def is_whole_space(c: Cone) -> bool:
    return lineality(c).dimension == c.dim


def is_full_dimensional(c: Cone) -> bool:
    return not _geometry(c).equations


def transform(c: Cone, u: UnimodularWitness) -> Cone:
    """Image ``U . c``: generators map by ``U``, normals by ``n -> n U^-1``."""
    if u.dim != c.dim:
        raise InvalidInput("witness dimension does not match cone")
    gens = None if c.generators is None else tuple(mat_vec(u.matrix, g) for g in c.generators)
    normals = (
        None if c.facet_normals is None else tuple(vec_mat(n, u.inverse) for n in c.facet_normals)
    )
    return Cone(c.dim, generators=gens, facet_normals=normals)


def standard_cone(d: int, k: int) -> Cone:
    """The cone ``{x_1, ..., x_{d-k} >= 0}`` in R^d."""
    if not 0 <= k <= d:
        raise InvalidInput("need 0 <= k <= d")
    normals = tuple(tuple(int(i == j) for j in range(d)) for i in range(d - k))
    return Cone(d, facet_normals=normals)


@dataclass(frozen=True)
class StandardFormWitness:
    k: int
    u: UnimodularWitness


def normalize_to_standard(c: Cone) -> StandardFormWitness:
    """Find ``U`` in SL(d, Z) mapping ``c`` onto ``{x_1, ..., x_{d-k} >= 0}``.

    Such ``U`` exists exactly when the cone is full dimensional with ``d - k``
    facets whose normals extend to a Z-basis; the normals then become the
    first ``d - k`` rows of ``U``.
    """
    d = c.dim
    lin = lineality(c)
    k = lin.dimension
    if k == 0:
        raise NotApplicable("cone is strictly convex")
    if k == d:
        raise NotApplicable("cone is the whole space")
    g = _geometry(c)
    if g.equations:
        raise NotUnimodular("cone is not full dimensional")
    normals = list(g.inequalities)
    if len(normals) != d - k:
        raise NotUnimodular(
            f"quotient cone has {len(normals)} facets, a standard cone has {d - k}"
        )
    s, left, right = smith_normal_form(normals)
    factors = [s[i][i] for i in range(d - k)]
    if any(f != 1 for f in factors):
        raise NotUnimodular(f"facet normals span a sublattice with invariant factors {factors}")
    # N = L^-1 [I | 0] R^-1, so blockdiag(L^-1, I) R^-1 has N as its top rows
    r_inv = right.inverse
    top = [
        tuple(sum(left.inverse[i][j] * r_inv[j][col] for j in range(d - k)) for col in range(d))
        for i in range(d - k)
    ]
    rows = top + [tuple(r_inv[i]) for i in range(d - k, d)]
    if det(rows) < 0:
        rows[-1] = tuple(-x for x in rows[-1])
    u_mat = tuple(rows)
    u_inv = _integer_inverse(u_mat)
    witness = StandardFormWitness(k, UnimodularWitness(u_mat, u_inv))
    _check_standard(c, witness)
    return witness


def _integer_inverse(m: tuple[IntVector, ...]) -> tuple[IntVector, ...]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        p = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[p] = a[p], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(int(x) for x in row[n:]) for row in a)


def _check_standard(c: Cone, w: StandardFormWitness) -> None:
    d, m = c.dim, c.dim - w.k
    image = transform(dual_description(c), w.u)
    expected = {tuple(int(i == j) for j in range(d)) for i in range(m)}
    if set(image.facet_normals) != expected:
        raise NotUnimodular("normalization failed to reach the standard cone")
    for gen in image.generators:
        if any(gen[i] < 0 for i in range(m)):
            raise NotUnimodular("normalization failed to reach the standard cone")


def reeb_vector(c: Cone) -> IntVector:
    """Sum of the primitive inward facet normals of a strictly convex cone.

    For a lower-dimensional pointed cone the implicit equations are left out,
    the sum of the genuine facet normals still pairs positively with every
    nonzero point of the cone.
    """
    if not is_strictly_convex(c):
        raise NotStrictlyConvex("Reeb vector needs a strictly convex cone")
    normals = _geometry(c).inequalities
    if not normals:
        raise EmptyFacetSet("cone has no facets")
    return tuple(sum(col) for col in zip(*normals))


@dataclass(frozen=True)
class SlicePolytope:
    reeb_vector: IntVector
    vertices: tuple[tuple[Fraction, ...], ...]
    bounded: bool


def slice_cone(c: Cone, r: Sequence[int]) -> SlicePolytope:
    """Intersect the cone with the hyperplane ``r . x = 1``.

    Vertices are the extreme rays that pair positively with ``r``, rescaled
    onto the hyperplane. The slice is bounded iff the cone is pointed and
    every extreme ray pairs positively.
    """
    r = tuple(int(x) for x in r)
    if len(r) != c.dim:
        raise InvalidInput("Reeb vector dimension does not match cone")
    if not any(r):
        raise ZeroReeb("slicing vector is zero")
    g = _geometry(c)
    verts = []
    bounded = not g.lineality
    for ray in g.rays:
        s = _dot(r, ray)
        if s > 0:
            verts.append(tuple(Fraction(x, s) for x in ray))
        else:
            bounded = False
    return SlicePolytope(r, tuple(sorted(verts)), bounded)
