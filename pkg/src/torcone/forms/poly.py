"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from ..errors import InvalidInput, VariableMismatch

Scalar = Union[int, Fraction]
Exponent = tuple[int, ...]


def _grlex_key(e: Exponent):
    return (-sum(e), tuple(-x for x in e))


class Poly:
    """Polynomial over Q in the ordered ``variables``.

    ``terms`` maps exponent tuples to nonzero Fractions. Instances are treated
    as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, Scalar] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise InvalidInput(f"exponent {e} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> Poly:
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> Poly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> Poly:
        variables = tuple(variables)
        try:
            i = variables.index(name)
        except ValueError:
            raise InvalidInput(f"unknown variable {name!r}") from None
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): 1})

    def _check(self, other: Poly) -> None:
        if self.variables != other.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.variables, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise InvalidInput("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order."""
        for e in sorted(self.terms, key=_grlex_key):
            yield e, self.terms[e]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(self.variables, {})
            return Poly._raw(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise InvalidInput("negative power")
        out = Poly.constant(self.variables, 1)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, i: int) -> Poly:
        """Partial derivative with respect to variable number ``i``."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Poly._raw(self.variables, out)

    def substitute(self, values: Mapping[str, Scalar]) -> Poly:
        """Replace the named variables by numbers; the result keeps the
        remaining variables, in order."""
        idx = [i for i, v in enumerate(self.variables) if v in values]
        keep = [i for i, v in enumerate(self.variables) if v not in values]
        vals = {i: Fraction(values[self.variables[i]]) for i in idx}
        powers: dict = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = vals[i] ** k
            return powers[key]

        out: dict = {}
        for e, c in self.terms.items():
            for i in idx:
                if e[i]:
                    c = c * pw(i, e[i])
            if c:
                f = tuple(e[i] for i in keep)
                s = out.get(f, 0) + c
                if s:
                    out[f] = s
                else:
                    out.pop(f, None)
        return Poly._raw(tuple(self.variables[i] for i in keep), out)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise InvalidInput(f"no value for {missing}")
        return self.substitute(values).constant_value()

    def with_variables(self, variables: Sequence[str]) -> Poly:
        """Re-express over a superset (or reordering) of the variables."""
        variables = tuple(variables)
        pos = []
        for v in self.variables:
            if v not in variables:
                raise VariableMismatch(f"variable {v!r} missing from {variables}")
            pos.append(variables.index(v))
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(variables)
            for p, k in zip(pos, e):
                f[p] = k
            out[tuple(f)] = c
        return Poly._raw(variables, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
