import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from torcone.classify import (
    OVERTWISTED_LABEL,
    REEB_LABEL,
    AnglePair,
    ClassificationResult,
    ConeInput,
    FillabilityVerdict,
    FreeTorus3,
    FreeTriple,
    FreeTrivial,
    Verdict,
    classify,
    classify_3_free,
    classify_3_non_free,
    classify_higher_free,
    classify_higher_non_free,
)
from torcone.cone import Cone, standard_cone, transform
from torcone.errors import InvalidAnglePair, InvalidInput, UnclassifiableCone, WholeSpaceCone
from torcone.lattice import mat_vec, random_sl

STRONG = Verdict.STRONGLY_FILLABLE


def orthant(d):
    return Cone(d, generators=[tuple(int(i == j) for j in range(d)) for i in range(d)])


def test_first_orthant_r3():
    r = classify(ConeInput(orthant(3)))
    assert r.manifold == REEB_LABEL
    assert r.reeb_type and r.verdict.tag is STRONG
    assert r.witnesses.reeb == (1, 1, 1)
    assert r.witnesses.slice.bounded
    assert set(r.witnesses.slice.vertices) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_free_triple_246():
    r = classify(FreeTriple((2, 4, 6)))
    assert r.manifold == "T^2 × L_2"
    assert r.verdict.tag is Verdict.WEAKLY_FILLABLE_STRONG_OPEN
    g, u = r.witnesses.triple_reduction
    assert g == 2 and mat_vec(u.matrix, (2, 4, 6)) == (2, 0, 0)


def test_free_trivial_cosphere():
    r = classify(FreeTrivial(4))
    assert r.manifold == "T^4 × S^3"
    assert r.verdict == FillabilityVerdict(STRONG, "Stein")


@pytest.mark.parametrize(
    "pair, manifold, verdict, reeb",
    [
        (AnglePair((1, 0), (0, 1)), REEB_LABEL, STRONG, True),
        (AnglePair((1, 0), (-1, 0)), "S^1 × S^2", STRONG, False),
        (AnglePair((1, 0), (0, -1)), OVERTWISTED_LABEL, Verdict.OVERTWISTED, False),
        (AnglePair((1, 0), (1, 0), wraps_full_circle=True), OVERTWISTED_LABEL, Verdict.OVERTWISTED, False),
        (AnglePair((1, 0), (0, 1), wraps_full_circle=True), OVERTWISTED_LABEL, Verdict.OVERTWISTED, False),
    ],
)
def test_angle_pairs(pair, manifold, verdict, reeb):
    r = classify_3_non_free(pair)
    assert (r.manifold, r.verdict.tag, r.reeb_type) == (manifold, verdict, reeb)


def test_angle_pair_errors():
    with pytest.raises(InvalidAnglePair):
        classify_3_non_free(AnglePair((1, 0), (2, 0)))
    with pytest.raises(InvalidAnglePair):
        classify_3_non_free(AnglePair((0, 0), (1, 0)))
    with pytest.raises(InvalidAnglePair):
        classify_3_non_free(AnglePair((2, 0), (0, 1)))
    with pytest.raises(InvalidAnglePair):
        classify_3_non_free(AnglePair((1, 0), (1, 0)))


def test_planar_cones_by_geometry():
    assert classify(ConeInput(orthant(2))).reeb_type
    half = classify(ConeInput(Cone(2, facet_normals=[(0, 1)])))
    assert half.manifold == "S^1 × S^2" and half.verdict.tag is STRONG
    plane = classify(ConeInput(Cone(2, facet_normals=[])))
    assert plane.verdict.tag is Verdict.OVERTWISTED
    with pytest.raises(InvalidInput):
        classify(ConeInput(Cone(2, generators=[(1, 0)])))


@pytest.mark.parametrize("k, verdict", [(1, STRONG), (2, Verdict.WEAKLY_FILLABLE_ONLY), (7, Verdict.WEAKLY_FILLABLE_ONLY)])
def test_free_torus3(k, verdict):
    r = classify_3_free(k)
    assert r.manifold == f"T^3 with ξ_{k}"
    assert r.verdict.tag is verdict


@pytest.mark.parametrize("k", [0, -1, True, 1.5])
def test_free_torus3_rejects(k):
    with pytest.raises(InvalidInput):
        classify_3_free(k)


def test_higher_non_free_examples():
    r = classify_higher_non_free(Cone(3, facet_normals=[(1, 0, 0)]))
    assert r.manifold == "T^2 × S^3" and r.verdict.tag is STRONG
    assert r.verdict.stein_note == "1-subcritical Stein"
    assert r.witnesses.standard_form.k == 2
    r = classify_higher_non_free(orthant(4))
    assert r.reeb_type and r.verdict.tag is STRONG
    r = classify_higher_non_free(Cone(3, facet_normals=[(1, 0, 0), (0, 1, 0)]))
    assert r.manifold == "T^1 × S^4"
    assert r.verdict.stein_note == "2-subcritical Stein"


def test_higher_non_free_errors():
    with pytest.raises(WholeSpaceCone):
        classify_higher_non_free(Cone(3, facet_normals=[]))
    with pytest.raises(UnclassifiableCone):
        classify_higher_non_free(Cone(3, facet_normals=[(1, 0, 0), (1, 2, 0)]))
    with pytest.raises(InvalidInput):
        classify_higher_non_free(orthant(2))
    with pytest.raises(InvalidInput):
        classify_higher_non_free(Cone(3, generators=[(1, 0, 0), (0, 1, 0)]))


@pytest.mark.parametrize(
    "triple, manifold, verdict, note",
    [
        ((0, 0, 0), "T^3 × S^2", STRONG, "Stein"),
        ((3, 6, 0), "T^2 × L_3", Verdict.WEAKLY_FILLABLE_STRONG_OPEN, None),
        ((1, 1, 1), "T^2 × L_1", Verdict.WEAKLY_FILLABLE_STRONG_OPEN, None),
    ],
)
def test_higher_free(triple, manifold, verdict, note):
    r = classify_higher_free(FreeTriple(triple))
    assert (r.manifold, r.verdict.tag, r.verdict.stein_note) == (manifold, verdict, note)


def test_higher_free_rejects():
    with pytest.raises(InvalidInput):
        classify_higher_free(FreeTriple((1, 2)))
    with pytest.raises(InvalidInput):
        classify_higher_free(FreeTrivial(3))
    with pytest.raises(InvalidInput):
        classify("cone")


def test_reeb_result_must_be_strong():
    with pytest.raises(AssertionError):
        ClassificationResult("x", True, FillabilityVerdict(Verdict.OVERTWISTED))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3).filter(any))
def test_triple_label_is_gcd(v):
    r = classify(FreeTriple(tuple(v)))
    assert r.manifold == f"T^2 × L_{oracles.euclid_gcd(v)}"


def _random_cone(rng, d):
    kind = rng.random()
    if kind < 0.4:
        return standard_cone(d, rng.randint(1, d - 1))
    if kind < 0.7:
        return orthant(d)
    rays = [tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(rng.randint(d, d + 3))]
    rays = [r for r in rays if any(r)] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return Cone(d, generators=rays)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 4), st.integers(0, 10**6))
def test_sl_invariance(d, seed):
    rng = random.Random(seed)
    c = _random_cone(rng, d)
    u = random_sl(d, rng)
    a = classify_higher_non_free(c)
    b = classify_higher_non_free(transform(c, u))
    assert (a.manifold, a.reeb_type, a.verdict) == (b.manifold, b.reeb_type, b.verdict)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3), st.integers(0, 10**6))
def test_triple_sl_invariance(v, seed):
    m = random_sl(3, random.Random(seed))
    a = classify(FreeTriple(tuple(v)))
    b = classify(FreeTriple(mat_vec(m.matrix, v)))
    assert (a.manifold, a.verdict) == (b.manifold, b.verdict)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_reeb_type_implies_strong(seed):
    rng = random.Random(seed)
    choice = rng.randrange(4)
    if choice == 0:
        r = classify(ConeInput(_random_cone(rng, rng.randint(3, 4))))
    elif choice == 1:
        ray = lambda: (rng.randint(-3, 3), rng.randint(-3, 3))  # noqa: E731
        a, b = ray(), ray()
        try:
            r = classify(AnglePair(a, b, rng.random() < 0.1))
        except InvalidInput:
            return
    elif choice == 2:
        r = classify(FreeTriple(tuple(rng.randint(-5, 5) for _ in range(3))))
    else:
        r = classify(FreeTorus3(rng.randint(1, 9)))
    if r.reeb_type:
        assert r.verdict.tag is STRONG
    assert r.verdict.tag.weakly_fillable == (r.verdict.tag is not Verdict.OVERTWISTED)
