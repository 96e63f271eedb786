"""Sparse multivariate polynomials with exact integer coefficients.

A :class:`Poly` is a map from exponent tuples to nonzero ints over a fixed,
ordered tuple of variable names.  Exponents may be negative (Laurent terms
show up in the symmetric weight sums).  Two-variable polynomials over
``("a", "b")`` play the role of the bivariate analogues, one-variable ones over
``("x",)`` the univariate ones.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Number = Union[int, Fraction]


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[tuple[int, ...], int] = ()):
        self.vars = tuple(vars)
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent {exp} does not fit variables {self.vars}")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # construction

    @classmethod
    def const(cls, vars: tuple[str, ...], c: int) -> "Poly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: tuple[str, ...], name: str, power: int = 1) -> "Poly":
        exp = [0] * len(vars)
        exp[vars.index(name)] = power
        return cls(vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, vars: tuple[str, ...], exp: tuple[int, ...], c: int = 1) -> "Poly":
        return cls(vars, {tuple(exp): c})

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return Poly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only available for monomials via Poly.var")
        out = Poly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # evaluation and transformation

    def evaluate(self, **values: Number) -> Fraction:
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for name, e in zip(self.vars, exp):
                term *= Fraction(values[name]) ** e
            total += term
        return total

    def specialize(self, **values: int) -> "Poly":
        """Substitute integers for some variables; those variables are dropped."""
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            coeff = Fraction(c)
            for name, e in zip(self.vars, exp):
                if name in values:
                    coeff *= Fraction(values[name]) ** e
            if coeff.denominator != 1:
                raise ValueError("specialization leaves a non-integer coefficient")
            key = tuple(exp[i] for i in keep)
            out[key] = out.get(key, 0) + int(coeff)
        return Poly(tuple(self.vars[i] for i in keep), out)

    def swap(self, u: str, v: str) -> "Poly":
        iu, iv = self.vars.index(u), self.vars.index(v)
        out = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[iu], e[iv] = e[iv], e[iu]
            out[tuple(e)] = c
        return Poly(self.vars, out)

    def diff(self, name: str) -> "Poly":
        k = self.vars.index(name)
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            if exp[k] == 0:
                continue
            e = list(exp)
            e[k] -= 1
            out[tuple(e)] = out.get(tuple(e), 0) + c * exp[k]
        return Poly(self.vars, out)

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degree(self, name: str) -> int:
        k = self.vars.index(name)
        return max((e[k] for e in self.terms), default=0)

    # serialization

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {
            "var": list(self.vars),
            "terms": [list(e) + [str(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, record: dict) -> "Poly":
        vars = tuple(record["var"])
        return cls(vars, {tuple(t[:-1]): int(t[-1]) for t in record["terms"]})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.vars, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.vars}, {str(self)!r})"


AB = ("a", "b")
X = ("x",)
XYZ = ("x", "y", "z")


def rising(base: Poly, length: int, start: int = 0) -> Poly:
    """``(base+start)(base+start+1)...(base+start+length-1)``; empty product is 1."""
    out = Poly.const(base.vars, 1)
    for i in range(length):
        out = out * (base + (start + i))
    return out
