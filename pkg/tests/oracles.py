"""Independent brute-force oracles used to cross-check the library.

Nothing here imports torcone: each oracle is deliberately naive (Euclid,
Leibniz expansion, Fourier-Motzkin elimination) so that agreement with the
optimized code is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import prod


def euclid_gcd(values) -> int:
    g = 0
    for v in values:
        a, b = abs(g), abs(v)
        while b:
            a, b = b, a % b
        g = a
    return g


def perm_sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def leibniz_det(m) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    return sum(
        perm_sign(p) * prod(Fraction(m[i][p[i]]) for i in range(n))
        for p in itertools.permutations(range(n))
    )


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _fm_feasible(ineqs, nvars) -> bool:
    """Is ``{y : a . y <= b for (a, b) in ineqs}`` nonempty? Fourier-Motzkin."""
    system = [(list(a), Fraction(b)) for a, b in ineqs]
    for k in range(nvars):
        pos, neg, rest = [], [], []
        for a, b in system:
            if a[k] > 0:
                pos.append((a, b))
            elif a[k] < 0:
                neg.append((a, b))
            else:
                rest.append((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                sp, sn = -an[k], ap[k]
                a = [sp * x + sn * y for x, y in zip(ap, an)]
                rest.append((a, sp * bp + sn * bn))
        # drop rows made trivially identical to keep the system small
        system = list({(tuple(a), b) for a, b in rest})
        system = [(list(a), b) for a, b in system]
    return all(b >= 0 for _, b in system)


def in_cone(generators, x) -> bool:
    """Exact LP: does ``x = sum l_i g_i`` have a solution with ``l >= 0``?

    Gaussian elimination removes the equality constraints, then
    Fourier-Motzkin decides feasibility of the remaining inequalities.
    """
    gens = [list(g) for g in generators]
    m = len(gens)
    d = len(x)
    if m == 0:
        return not any(x)
    aug = [[Fraction(gens[i][r]) for i in range(m)] + [Fraction(x[r])] for r in range(d)]
    pivots = []
    row = 0
    for c in range(m):
        p = next((i for i in range(row, d) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[row], aug[p] = aug[p], aug[row]
        pv = aug[row][c]
        aug[row] = [v / pv for v in aug[row]]
        for i in range(d):
            if i != row and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[row])]
        pivots.append(c)
        row += 1
    if any(all(v == 0 for v in aug[i][:m]) and aug[i][m] != 0 for i in range(d)):
        return False
    free = [c for c in range(m) if c not in pivots]
    ineqs = []
    # pivot variable l_p = rhs - sum coef * l_f >= 0  <=>  sum coef * l_f <= rhs
    for r, p in enumerate(pivots):
        ineqs.append(([aug[r][f] for f in free], aug[r][m]))
    # free variables l_f >= 0  <=>  -l_f <= 0
    for j in range(len(free)):
        ineqs.append(([-Fraction(int(i == j)) for i in range(len(free))], Fraction(0)))
    return _fm_feasible(ineqs, len(free))


def lineality_dimension(generators) -> int:
    """Dimension of the largest subspace in ``cone(generators)``: the span of
    the generators ``g`` with ``-g`` also in the cone."""
    gens = [tuple(g) for g in generators if any(g)]
    both = [g for g in gens if in_cone(gens, [-x for x in g])]
    return rank(both) if both else 0


def is_pointed(generators) -> bool:
    return lineality_dimension(generators) == 0


def facets_oracle_ok(generators, normals, dim) -> bool:
    """Sign check of every (generator, normal) pair plus tightness: each normal
    vanishes on generators spanning a hyperplane of the cone's span."""
    gens = [g for g in generators if any(g)]
    span = rank(gens)
    for n in normals:
        vals = [sum(a * b for a, b in zip(n, g)) for g in gens]
        if any(v < 0 for v in vals):
            return False
        tight = [g for g, v in zip(gens, vals) if v == 0]
        if any(v > 0 for v in vals):
            if (rank(tight) if tight else 0) != span - 1:
                return False
    return True


def form_on_frame(components, coeff_at_point, frame) -> Fraction:
    """Value of ``sum_I c_I dx_I`` on a frame via Leibniz expansion of each
    minor. ``components`` maps index tuples to coefficient objects and
    ``coeff_at_point`` turns one into a number."""
    total = Fraction(0)
    for idx, c in components.items():
        minor = [[v[i] for i in idx] for v in frame]
        total += coeff_at_point(c) * leibniz_det(minor)
    return total
