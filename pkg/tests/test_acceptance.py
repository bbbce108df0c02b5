"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are printed with capture disabled, so they also appear in a plain run.
"""

import random
import time
from fractions import Fraction

import pytest

import oracles
from torcone.classify import (
    OVERTWISTED_LABEL,
    REEB_LABEL,
    AnglePair,
    ConeInput,
    FreeTorus3,
    FreeTriple,
    Verdict,
    classify,
)
from torcone.cone import (
    Cone,
    is_strictly_convex,
    lineality,
    reeb_vector,
    slice_cone,
    standard_cone,
    transform,
)
from torcone.forms import (
    ManifoldChart,
    verify_contact_condition,
    verify_moment_image,
    verify_strong_filling,
    verify_weak_fill,
    weak_fill_identities,
)
from torcone.lattice import det, gcd_reduce, mat_vec, random_sl

STRONG = Verdict.STRONGLY_FILLABLE


@pytest.fixture
def report(capsys):
    start = time.perf_counter()

    def emit(n, failures, detail):
        status = "PASS" if failures == 0 else "FAIL"
        with capsys.disabled():
            print(f"\n{status} criterion {n}: {detail} ({time.perf_counter() - start:.1f}s)")
        assert failures == 0, detail

    return emit


def unit(d, i):
    return tuple(int(i == j) for j in range(d))


def orthant(d):
    return Cone(d, generators=[unit(d, i) for i in range(d)])


def test_criterion_1_triple_reduction(report):
    rng = random.Random(1)
    failures = 0
    for _ in range(500):
        v = (0, 0, 0)
        while not any(v):
            v = tuple(rng.randint(-50, 50) for _ in range(3))
        g, u = gcd_reduce(v)
        ok = det(u.matrix) == 1 and mat_vec(u.matrix, v) == (g, 0, 0) and g == oracles.euclid_gcd(v)
        failures += not ok
    report(1, failures, f"500 triples reduced, {failures} failures")


GOLDEN = [
    ("orthant R^2", ConeInput(orthant(2)), REEB_LABEL, True, STRONG),
    ("orthant R^3", ConeInput(orthant(3)), REEB_LABEL, True, STRONG),
    ("orthant R^4", ConeInput(orthant(4)), REEB_LABEL, True, STRONG),
    ("straight pair", AnglePair((1, 0), (-1, 0)), "S^1 × S^2", False, STRONG),
    ("reflex pair", AnglePair((1, 0), (0, -1)), OVERTWISTED_LABEL, False, Verdict.OVERTWISTED),
    ("half space R^3", ConeInput(Cone(3, facet_normals=[(1, 0, 0)])), "T^2 × S^3", False, STRONG),
    ("triple (2,4,6)", FreeTriple((2, 4, 6)), "T^2 × L_2", False, Verdict.WEAKLY_FILLABLE_STRONG_OPEN),
    ("triple (0,0,0)", FreeTriple((0, 0, 0)), "T^3 × S^2", False, STRONG),
    ("free T^3, k=1", FreeTorus3(1), "T^3 with ξ_1", False, STRONG),
    ("free T^3, k=2", FreeTorus3(2), "T^3 with ξ_2", False, Verdict.WEAKLY_FILLABLE_ONLY),
]


def test_criterion_2_golden_table(report):
    bad = []
    for name, inp, manifold, reeb, verdict in GOLDEN:
        r = classify(inp)
        if (r.manifold, r.reeb_type, r.verdict.tag) != (manifold, reeb, verdict):
            bad.append(name)
    report(2, len(bad), f"{len(GOLDEN)} golden rows, mismatches: {bad or 'none'}")


def _random_cone(rng, d):
    kind = rng.randrange(3)
    if kind == 0:
        return standard_cone(d, rng.randint(1, d - 1))
    rays = [tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(rng.randint(1, 4))]
    rays = [r for r in rays if any(r)] + [unit(d, i) for i in range(d)]
    return Cone(d, generators=rays)


def test_criterion_3_sl_invariance(report):
    rng = random.Random(3)
    failures = 0
    for _ in range(100):
        d = rng.randint(3, 4)
        c = _random_cone(rng, d)
        a = classify(ConeInput(c))
        b = classify(ConeInput(transform(c, random_sl(d, rng))))
        failures += (a.manifold, a.reeb_type, a.verdict) != (b.manifold, b.reeb_type, b.verdict)
    for _ in range(100):
        v = tuple(rng.randint(-30, 30) for _ in range(3))
        m = random_sl(3, rng)
        a, b = classify(FreeTriple(v)), classify(FreeTriple(mat_vec(m.matrix, v)))
        failures += (a.manifold, a.verdict) != (b.manifold, b.verdict)
    report(3, failures, f"100 cone and 100 triple SL(Z) pairs, {failures} failures")


def test_criterion_4_cone_oracle(report):
    rng = random.Random(4)
    failures = 0
    for _ in range(200):
        d = rng.randint(2, 4)
        rays = []
        while not rays:
            rays = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(rng.randint(1, 8))]
            rays = [r for r in rays if any(r)]
        c = Cone(d, generators=rays)
        dim = oracles.lineality_dimension(rays)
        failures += lineality(c).dimension != dim or is_strictly_convex(c) != (dim == 0)
    report(4, failures, f"200 random cones against the LP oracle, {failures} disagreements")


CONTACT_CASES = [("beta", ManifoldChart.tk_sphere(*dk)) for dk in [(2, 1), (3, 1), (3, 2), (4, 2), (4, 4)]]
CONTACT_CASES.append(("alpha", ManifoldChart.t2s3()))


def test_criterion_5_contact_positivity(report):
    failures = 0
    parts = []
    for name, chart in CONTACT_CASES:
        r = verify_contact_condition(chart, name, 1000, seed=5)
        bad = r.checked != 1000 or r.failures or not r.min_margin > 0
        failures += bool(bad)
        parts.append(f"{name} on {chart.label()}: {r.failures} failures")
    report(5, failures, "; ".join(parts))


def test_criterion_6_strong_filling(report):
    failures = 0
    for dk in [(2, 2), (3, 1), (3, 2), (4, 2)]:
        failures += not verify_strong_filling(*dk).ok
    report(6, failures, f"strong-filling identities for 4 (d, k) pairs, {failures} failures")


def test_criterion_7_weak_fill(report):
    residuals = [name for name, res in weak_fill_identities().items() if not res.is_zero()]
    t_star, r = verify_weak_fill(500, [0, 1, 10, 100], seed=7)
    powers = {Fraction(1, 2**m) for m in range(21)}
    failures = len(residuals) + (not r.ok) + (t_star not in powers) + (r.checked != 2000)
    report(
        7,
        failures,
        f"identities failing: {residuals or 'none'}; tStar = {t_star}, "
        f"{r.checked} checks, {r.failures} failures, min margin {r.min_margin}",
    )


def test_criterion_8_moment_maps(report):
    failures = 0
    for dk in [(2, 1), (3, 1), (3, 2), (4, 2)]:
        r = verify_moment_image("beta", *dk, 500, seed=8)
        failures += not r.ok or r.checked != 500
    for d in (2, 3, 4):
        r = verify_moment_image("cosphere", d, None, 500, seed=8)
        failures += not r.ok or r.checked != 500
    report(8, failures, f"4 beta images in C and 3 cosphere norms, 500 samples each, {failures} failures")


def test_criterion_9_slice_coherence(report):
    rng = random.Random(9)
    failures = pointed = non_pointed = 0
    while pointed < 100 or non_pointed < 100:
        d = rng.randint(2, 4)
        rays = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(rng.randint(1, 6))]
        rays = [r for r in rays if any(r)]
        if not rays:
            continue
        if rng.random() < 0.5:
            rays.append(tuple(-x for x in rays[0]))
        c = Cone(d, generators=rays)
        strict = is_strictly_convex(c)
        if strict and pointed < 100:
            pointed += 1
        elif not strict and non_pointed < 100:
            non_pointed += 1
        else:
            continue
        if strict:
            r = reeb_vector(c)
        else:
            r = tuple(rng.randint(-3, 3) for _ in range(d))
            r = r if any(r) else unit(d, 0)
        failures += slice_cone(c, r).bounded != strict
    report(9, failures, f"100 pointed and 100 non-pointed cones, {failures} mismatches")
