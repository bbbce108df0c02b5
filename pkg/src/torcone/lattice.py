"""Exact integer linear algebra with unimodular witnesses.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
everything is immutable, hashable and arbitrary precision. Each normal form
comes with the unimodular transformation that produces it, together with the
inverse of that transformation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInput, NotPrimitive, ZeroVector

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]

__all__ = [
    "IntVector",
    "IntMatrix",
    "UnimodularWitness",
    "ext_gcd",
    "gcd_of",
    "primitive",
    "identity",
    "transpose",
    "mat_mul",
    "mat_vec",
    "vec_mat",
    "det",
    "rank",
    "gcd_reduce",
    "complete_to_basis",
    "hermite_normal_form",
    "smith_normal_form",
    "random_sl",
]


def _as_vector(v: Iterable) -> IntVector:
    out = []
    for x in v:
        if isinstance(x, bool) or int(x) != x:
            raise InvalidInput(f"non-integer entry {x!r}")
        out.append(int(x))
    return tuple(out)


def _as_matrix(m: Iterable[Iterable]) -> IntMatrix:
    rows = tuple(_as_vector(r) for r in m)
    if rows and len({len(r) for r in rows}) != 1:
        raise InvalidInput("ragged matrix")
    return rows


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = x*a + y*b = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def gcd_of(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    return g


def primitive(v: Sequence) -> IntVector:
    """Scale a rational vector to the primitive integer vector on its ray.

    The zero vector is returned unchanged.
    """
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = gcd_of(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m))


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> IntVector:
    """Row vector times matrix."""
    return tuple(sum(x * y for x, y in zip(v, col)) for col in zip(*m))


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise InvalidInput("determinant of a non-square matrix")
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of row vectors."""
    a = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not a:
        return 0
    r = 0
    for j in range(len(a[0])):
        p = next((i for i in range(r, len(a)) if a[i][j] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            if a[i][j]:
                f = a[i][j] / a[r][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


@dataclass(frozen=True)
class UnimodularWitness:
    """A square integer matrix of determinant +-1 together with its inverse.

    Witnesses produced by :func:`gcd_reduce` and :func:`complete_to_basis`
    always have determinant +1; normal-form witnesses may have -1.
    """

    matrix: IntMatrix
    inverse: IntMatrix

    def __post_init__(self):
        n = len(self.matrix)
        if mat_mul(self.matrix, self.inverse) != identity(n):
            raise InvalidInput("witness inverse does not invert matrix")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return det(self.matrix)

    def apply(self, v: Sequence[int]) -> IntVector:
        return mat_vec(self.matrix, v)

    def inverted(self) -> UnimodularWitness:
        return UnimodularWitness(self.inverse, self.matrix)

    @classmethod
    def identity(cls, n: int) -> UnimodularWitness:
        i = identity(n)
        return cls(i, i)


class _Tracked:
    """Mutable square matrix T with its inverse, updated by elementary ops.

    ``left=True`` tracks row operations (T <- E T), otherwise column
    operations (T <- T E).
    """

    def __init__(self, n: int, left: bool):
        self.t = [list(r) for r in identity(n)]
        self.inv = [list(r) for r in identity(n)]
        self.left = left

    def _rows(self, i, j, e):
        # rows i, j of t <- e @ (rows i, j); columns i, j of inv <- (cols) @ e^-1
        (p, q), (r, s) = e
        ti, tj = self.t[i], self.t[j]
        self.t[i] = [p * x + q * y for x, y in zip(ti, tj)]
        self.t[j] = [r * x + s * y for x, y in zip(ti, tj)]
        d = p * s - q * r
        ip, iq, ir, is_ = s * d, -q * d, -r * d, p * d  # inverse, d = +-1
        for row in self.inv:
            x, y = row[i], row[j]
            row[i], row[j] = x * ip + y * ir, x * iq + y * is_

    def _cols(self, i, j, e):
        # columns i, j of t <- (cols) @ e; rows i, j of inv <- e^-1 @ (rows)
        (p, q), (r, s) = e
        for row in self.t:
            x, y = row[i], row[j]
            row[i], row[j] = x * p + y * r, x * q + y * s
        d = p * s - q * r
        ip, iq, ir, is_ = s * d, -q * d, -r * d, p * d
        vi, vj = self.inv[i], self.inv[j]
        self.inv[i] = [ip * x + iq * y for x, y in zip(vi, vj)]
        self.inv[j] = [ir * x + is_ * y for x, y in zip(vi, vj)]

    def op(self, i, j, e):
        if self.left:
            self._rows(i, j, e)
        else:
            self._cols(i, j, e)

    def negate(self, i):
        if self.left:
            self.t[i] = [-x for x in self.t[i]]
            for row in self.inv:
                row[i] = -row[i]
        else:
            for row in self.t:
                row[i] = -row[i]
            self.inv[i] = [-x for x in self.inv[i]]

    def witness(self) -> UnimodularWitness:
        return UnimodularWitness(
            tuple(tuple(r) for r in self.t), tuple(tuple(r) for r in self.inv)
        )


def _gcd_step(a: int, b: int) -> tuple[int, tuple[tuple[int, int], tuple[int, int]]]:
    """2x2 determinant-one matrix sending (a, b) to (+-gcd(a, b), 0).

    When ``a`` already divides ``b`` the step is a plain shear that keeps the
    first row; otherwise Euclid may swap rows and the normal-form loops cycle.
    """
    if a and b % a == 0:
        return a, ((1, 0), (-b // a, 1))
    g, x, y = ext_gcd(a, b)
    return g, ((x, y), (-b // g, a // g))


def gcd_reduce(v: Sequence[int]) -> tuple[int, UnimodularWitness]:
    """Find ``U`` in SL(n, Z) with ``U v = (g, 0, ..., 0)``, ``g = gcd(v)``.

    Entries are folded into the first slot one at a time by 2x2 extended
    Euclid steps, each of determinant one, so ``det U = 1`` by construction.
    """
    w = list(_as_vector(v))
    if len(w) < 2:
        raise InvalidInput("gcd_reduce needs a vector of dimension >= 2")
    if not any(w):
        raise ZeroVector("cannot reduce the zero vector")
    tr = _Tracked(len(w), left=True)
    for i in range(1, len(w)):
        if w[i] == 0:
            continue
        g, e = _gcd_step(w[0], w[i])
        tr.op(0, i, e)
        w[0], w[i] = g, 0
    if w[0] < 0:
        # only possible when v = (negative, 0, ..., 0); flip two rows to keep det = 1
        tr.negate(0)
        tr.negate(1)
        w[0] = -w[0]
    return w[0], tr.witness()


def complete_to_basis(v: Sequence[int]) -> UnimodularWitness:
    """Return a determinant-one matrix whose first column is the primitive ``v``."""
    v = _as_vector(v)
    if not any(v):
        raise ZeroVector("cannot complete the zero vector")
    if gcd_of(v) != 1:
        raise NotPrimitive(f"{v} is not primitive")
    if len(v) == 1:
        if v[0] != 1:
            raise NotPrimitive("(-1) has no determinant-one completion in dimension 1")
        return UnimodularWitness.identity(1)
    _, u = gcd_reduce(v)
    return u.inverted()


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, UnimodularWitness]:
    """Row-style Hermite normal form ``H = U M``.

    ``H`` is in row echelon form, every pivot is positive and the entries
    above a pivot lie in ``[0, pivot)``. The pivot row for each column is the
    smallest available row index with a nonzero entry.
    """
    a = [list(r) for r in _as_matrix(m)]
    rows = len(a)
    cols = len(a[0]) if a else 0
    tr = _Tracked(rows, left=True)

    def row_op(i, j, e):
        (p, q), (r, s) = e
        ai, aj = a[i], a[j]
        a[i] = [p * x + q * y for x, y in zip(ai, aj)]
        a[j] = [r * x + s * y for x, y in zip(ai, aj)]
        tr.op(i, j, e)

    r = 0
    for j in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][j] != 0), None)
        if p is None:
            continue
        if p != r:
            row_op(r, p, ((0, 1), (1, 0)))
        for i in range(r + 1, rows):
            if a[i][j]:
                _, e = _gcd_step(a[r][j], a[i][j])
                row_op(r, i, e)
        if a[r][j] < 0:
            a[r] = [-x for x in a[r]]
            tr.negate(r)
        piv = a[r][j]
        for i in range(r):
            q = a[i][j] // piv
            if q:
                row_op(i, r, ((1, -q), (0, 1)))
        r += 1
    return tuple(tuple(x) for x in a), tr.witness()


def smith_normal_form(
    m: Sequence[Sequence[int]],
) -> tuple[IntMatrix, UnimodularWitness, UnimodularWitness]:
    """Smith normal form ``S = U M V`` with ``d1 | d2 | ...`` and ``di >= 0``."""
    a = [list(r) for r in _as_matrix(m)]
    rows = len(a)
    cols = len(a[0]) if a else 0
    left = _Tracked(rows, left=True)
    right = _Tracked(cols, left=False)

    def row_op(i, j, e):
        (p, q), (r, s) = e
        ai, aj = a[i], a[j]
        a[i] = [p * x + q * y for x, y in zip(ai, aj)]
        a[j] = [r * x + s * y for x, y in zip(ai, aj)]
        left.op(i, j, e)

    def col_op(i, j, e):
        (p, q), (r, s) = e
        for row in a:
            x, y = row[i], row[j]
            row[i], row[j] = x * p + y * r, x * q + y * s
        right.op(i, j, e)

    swap = ((0, 1), (1, 0))
    for t in range(min(rows, cols)):
        found = next(
            ((i, j) for j in range(t, cols) for i in range(t, rows) if a[i][j] != 0),
            None,
        )
        if found is None:
            break
        i0, j0 = found
        if i0 != t:
            row_op(t, i0, swap)
        if j0 != t:
            col_op(t, j0, swap)
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    _, e = _gcd_step(a[t][t], a[i][t])
                    row_op(t, i, e)
            for j in range(t + 1, cols):
                if a[t][j]:
                    g, (row0, row1) = _gcd_step(a[t][t], a[t][j])
                    # column form of the same step: (a_tt, a_tj) @ F = (g, 0)
                    col_op(t, j, ((row0[0], row1[0]), (row0[1], row1[1])))
            if any(a[i][t] for i in range(t + 1, rows)):
                continue
            piv = a[t][t]
            bad = next(
                (
                    i
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if a[i][j] % piv
                ),
                None,
            )
            if bad is None:
                break
            row_op(t, bad, ((1, 1), (0, 1)))
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left.negate(t)
    return tuple(tuple(x) for x in a), left.witness(), right.witness()


def random_sl(n: int, rng: random.Random, steps: int = 12, bound: int = 3) -> UnimodularWitness:
    """Random element of SL(n, Z) as a product of elementary shears and swaps."""
    tr = _Tracked(n, left=True)
    if n < 2:
        return tr.witness()
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            # signed swap, determinant one
            tr.op(i, j, ((0, 1), (-1, 0)))
        else:
            c = rng.randint(-bound, bound) or 1
            tr.op(i, j, ((1, c), (0, 1)))
    return tr.witness()
