"""Fillability classification of compact connected toric contact manifolds.

The decision tree follows the known classification: the input is either a
moment cone (non-free action), an angle pair for three-dimensional non-free
actions, a bundle triple or trivial bundle for free actions in higher
dimension, or the fibre-component count of a free action on T^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .cone import (
    Cone,
    SlicePolytope,
    StandardFormWitness,
    dual_description,
    is_full_dimensional,
    is_strictly_convex,
    is_whole_space,
    lineality,
    normalize_to_standard,
    reeb_vector,
    slice_cone,
)
from .errors import (
    InvalidAnglePair,
    InvalidInput,
    NotUnimodular,
    UnclassifiableCone,
    WholeSpaceCone,
)
from .lattice import IntVector, UnimodularWitness, gcd_of, gcd_reduce

__all__ = [
    "ConeInput",
    "AnglePair",
    "FreeTriple",
    "FreeTorus3",
    "FreeTrivial",
    "ToricInput",
    "Verdict",
    "FillabilityVerdict",
    "Witnesses",
    "ClassificationResult",
    "classify",
    "classify_3_non_free",
    "classify_3_free",
    "classify_higher_non_free",
    "classify_higher_free",
    "REEB_LABEL",
]

REEB_LABEL = "lens-type (Reeb)"
OVERTWISTED_LABEL = "L_{p/q} or S^1 × S^2"


@dataclass(frozen=True)
class ConeInput:
    cone: Cone


@dataclass(frozen=True)
class AnglePair:
    """Boundary rays of a planar moment cone, swept counterclockwise.

    ``ray1`` and ``ray2`` are the directions at angles ``t1 < t2``;
    ``wraps_full_circle`` records ``t2 - t1 >= 2 pi``.
    """

    ray1: IntVector
    ray2: IntVector
    wraps_full_circle: bool = False


@dataclass(frozen=True)
class FreeTriple:
    triple: IntVector


@dataclass(frozen=True)
class FreeTorus3:
    k: int


@dataclass(frozen=True)
class FreeTrivial:
    d: int


ToricInput = Union[ConeInput, AnglePair, FreeTriple, FreeTorus3, FreeTrivial]


class Verdict(str, Enum):
    STRONGLY_FILLABLE = "StronglyFillable"
    WEAKLY_FILLABLE_ONLY = "WeaklyFillableOnly"
    WEAKLY_FILLABLE_STRONG_OPEN = "WeaklyFillableStrongOpen"
    OVERTWISTED = "Overtwisted"

    @property
    def weakly_fillable(self) -> bool:
        return self is not Verdict.OVERTWISTED


@dataclass(frozen=True)
class FillabilityVerdict:
    tag: Verdict
    stein_note: Optional[str] = None


@dataclass(frozen=True)
class Witnesses:
    standard_form: Optional[StandardFormWitness] = None
    reeb: Optional[IntVector] = None
    slice: Optional[SlicePolytope] = None
    triple_reduction: Optional[tuple[int, UnimodularWitness]] = None


@dataclass(frozen=True)
class ClassificationResult:
    manifold: str
    reeb_type: bool
    verdict: FillabilityVerdict
    witnesses: Witnesses = Witnesses()

    def __post_init__(self):
        # every Reeb-type toric contact manifold is strongly fillable
        if self.reeb_type and self.verdict.tag is not Verdict.STRONGLY_FILLABLE:
            raise AssertionError("Reeb type result must be strongly fillable")


def _strong(note: Optional[str] = None) -> FillabilityVerdict:
    return FillabilityVerdict(Verdict.STRONGLY_FILLABLE, note)


def _reeb_result(c: Cone) -> ClassificationResult:
    r = reeb_vector(c)
    return ClassificationResult(
        REEB_LABEL, True, _strong(), Witnesses(reeb=r, slice=slice_cone(c, r))
    )


def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _check_ray(r) -> IntVector:
    r = tuple(r)
    if len(r) != 2 or not all(isinstance(x, int) and not isinstance(x, bool) for x in r):
        raise InvalidAnglePair(f"ray {r} is not an integer vector in Z^2")
    if not any(r):
        raise InvalidAnglePair("zero ray")
    if gcd_of(r) != 1:
        raise InvalidAnglePair(f"ray {r} is not primitive")
    return r


def classify_3_non_free(a: AnglePair) -> ClassificationResult:
    """Three-dimensional non-free case: decided by the angle ``t2 - t1``."""
    r1, r2 = _check_ray(a.ray1), _check_ray(a.ray2)
    overtwisted = ClassificationResult(
        OVERTWISTED_LABEL, False, FillabilityVerdict(Verdict.OVERTWISTED)
    )
    if a.wraps_full_circle:
        return overtwisted
    cross = _cross(r1, r2)
    dot = r1[0] * r2[0] + r1[1] * r2[1]
    if cross > 0:
        return _reeb_result(Cone(2, generators=(r1, r2)))
    if cross < 0:
        return overtwisted
    if dot < 0:
        return ClassificationResult("S^1 × S^2", False, _strong())
    raise InvalidAnglePair(
        "rays point the same way; set the full-circle flag if t2 - t1 >= 2 pi"
    )


def _planar_angle_pair(c: Cone) -> AnglePair:
    """Boundary rays of a convex planar cone in counterclockwise order."""
    if is_whole_space(c):
        return AnglePair((1, 0), (1, 0), wraps_full_circle=True)
    if not is_full_dimensional(c):
        raise InvalidInput("planar moment cone must be two dimensional")
    full = dual_description(c)
    if is_strictly_convex(c):
        r1, r2 = full.generators
        if _cross(r1, r2) < 0:
            r1, r2 = r2, r1
        return AnglePair(r1, r2)
    (line,) = lineality(c).lattice_basis
    (normal,) = full.facet_normals
    if _cross(line, normal) < 0:
        line = tuple(-x for x in line)
    return AnglePair(line, tuple(-x for x in line))


def classify_3_free(k: int) -> ClassificationResult:
    """Free action on T^3 whose moment map fibres have ``k`` components."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidInput(f"fibre component count must be a positive integer, got {k!r}")
    label = f"T^3 with ξ_{k}"
    if k == 1:
        return ClassificationResult(label, False, _strong())
    return ClassificationResult(label, False, FillabilityVerdict(Verdict.WEAKLY_FILLABLE_ONLY))


def classify_higher_non_free(c: Cone) -> ClassificationResult:
    d = c.dim
    if d < 3:
        raise InvalidInput("higher-dimensional classification needs a cone in R^d with d >= 3")
    if is_whole_space(c):
        raise WholeSpaceCone("non-free actions with whole-space moment cone exist only in dimension three")
    if is_strictly_convex(c):
        if not is_full_dimensional(c):
            raise InvalidInput("moment cone must be full dimensional")
        return _reeb_result(c)
    try:
        w = normalize_to_standard(c)
    except NotUnimodular as exc:
        raise UnclassifiableCone(str(exc)) from exc
    k = w.k
    return ClassificationResult(
        f"T^{k} × S^{2 * d - k - 1}",
        False,
        _strong(f"{d - k}-subcritical Stein"),
        Witnesses(standard_form=w),
    )


def classify_higher_free(t: Union[FreeTriple, FreeTrivial]) -> ClassificationResult:
    if isinstance(t, FreeTrivial):
        d = t.d
        if isinstance(d, bool) or not isinstance(d, int) or d < 4:
            raise InvalidInput("trivial free bundle input needs d >= 4; use a zero triple for d = 3")
        return ClassificationResult(f"T^{d} × S^{d - 1}", False, _strong("Stein"))
    v = tuple(t.triple)
    if len(v) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise InvalidInput("bundle triple must be three integers")
    if not any(v):
        return ClassificationResult("T^3 × S^2", False, _strong("Stein"))
    g, u = gcd_reduce(v)
    return ClassificationResult(
        f"T^2 × L_{g}",
        False,
        FillabilityVerdict(Verdict.WEAKLY_FILLABLE_STRONG_OPEN),
        Witnesses(triple_reduction=(g, u)),
    )


def classify(inp: ToricInput) -> ClassificationResult:
    """Classify any admissible input and report its fillability verdict."""
    if isinstance(inp, ConeInput):
        c = inp.cone
        if c.dim == 2:
            return classify_3_non_free(_planar_angle_pair(c))
        if c.dim < 2:
            raise InvalidInput("moment cones live in R^d with d >= 2")
        return classify_higher_non_free(c)
    if isinstance(inp, AnglePair):
        return classify_3_non_free(inp)
    if isinstance(inp, FreeTorus3):
        return classify_3_free(inp.k)
    if isinstance(inp, (FreeTriple, FreeTrivial)):
        return classify_higher_free(inp)
    raise InvalidInput(f"unknown input kind {type(inp).__name__}")
