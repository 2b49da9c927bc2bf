"""Homogeneous polynomials in four variables x, y, z, w over Q.

A ``HomogPoly`` is an immutable map from exponent quadruples to nonzero
``Fraction`` coefficients.  Terms are kept in graded-lex order, so two equal
polynomials have identical term tuples, and the 35 degree-4 monomials always
come out in the same column order.
"""
from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import NodalQuarticError

NVARS = 4
VARIABLES = ("x", "y", "z", "w")

Monomial = tuple  # (e0, e1, e2, e3)


def monomial_basis(d: int) -> list[Monomial]:
    """All exponent quadruples of total degree d, ascending in graded-lex order.

    The list has C(d+3, 3) entries; for d = 4 this is the 35 coordinates of
    the space of quartic surfaces.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    out = []
    for combo in combinations_with_replacement(range(NVARS), d):
        e = [0] * NVARS
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort()
    assert len(out) == comb(d + 3, 3)
    return out


def _check_monomial(e) -> Monomial:
    e = tuple(int(x) for x in e)
    if len(e) != NVARS or any(x < 0 for x in e):
        raise ValueError(f"bad exponent vector {e}")
    return e


class HomogPoly:
    """Exact homogeneous polynomial in x, y, z, w."""

    __slots__ = ("_degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping | Iterable = ()):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = _check_monomial(e)
            if sum(e) != degree:
                raise ValueError(f"monomial {e} is not of degree {degree}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._degree = degree
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomogPoly":
        return cls(degree)

    @classmethod
    def monomial(cls, exponents, coeff=1) -> "HomogPoly":
        e = _check_monomial(exponents)
        return cls(sum(e), {e: coeff})

    @classmethod
    def variable(cls, i: int) -> "HomogPoly":
        e = [0] * NVARS
        e[i] = 1
        return cls.monomial(e)

    @classmethod
    def constant(cls, c) -> "HomogPoly":
        return cls(0, {(0, 0, 0, 0): c})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "HomogPoly":
        return cls(1, {tuple(int(i == j) for j in range(NVARS)): c for i, c in enumerate(coeffs)})

    # -- accessors -------------------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(_check_monomial(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient_vector(self) -> list[Fraction]:
        """Coefficients against ``monomial_basis(degree)``."""
        t = self.terms
        return [t.get(e, Fraction(0)) for e in monomial_basis(self._degree)]

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._degree if self._terms else -1, self._terms))
        return self._hash

    def __repr__(self):
        return f"HomogPoly({self._degree}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, e) if k
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

    # -- arithmetic ------------------------------------------------------------

    def _same_degree(self, other: "HomogPoly") -> int:
        if self.is_zero():
            return other._degree
        if other.is_zero():
            return self._degree
        if self._degree != other._degree:
            raise ValueError("cannot add polynomials of different degree")
        return self._degree

    def __add__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        d = self._same_degree(other)
        return HomogPoly(d, self._terms + other._terms)

    def __neg__(self):
        return HomogPoly(self._degree, ((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HomogPoly":
        c = Fraction(c)
        return HomogPoly(self._degree, ((e, c * a) for e, a in self._terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HomogPoly):
            return NotImplemented
        acc: dict = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc[e] = acc.get(e, 0) + c1 * c2
        return HomogPoly(self._degree + other._degree, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = HomogPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, i: int) -> "HomogPoly":
        """Partial derivative with respect to the i-th variable."""
        if self._degree == 0:
            return HomogPoly(0)
        acc = []
        for e, c in self._terms:
            if e[i]:
                f = list(e)
                f[i] -= 1
                acc.append((tuple(f), c * e[i]))
        return HomogPoly(self._degree - 1, acc)

    def __call__(self, point: Sequence) -> Fraction:
        return evaluate(self, point)

    def compose_linear(self, M: Sequence[Sequence]) -> "HomogPoly":
        """The polynomial x -> F(M x) for a 4x4 matrix M."""
        forms = [HomogPoly.linear_form(row) for row in M]
        powers = [[HomogPoly.constant(1)] for _ in range(NVARS)]
        out = HomogPoly(self._degree)
        for e, c in self._terms:
            term = HomogPoly.constant(c)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * forms[i])
                term = term * powers[i][k]
            out = out + term
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "degree": self._degree,
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self._terms
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "HomogPoly":
        try:
            degree = int(data["degree"])
            terms = []
            for t in data["terms"]:
                den = int(t.get("den", "1"))
                if den <= 0:
                    raise ValueError("denominator must be positive")
                terms.append((t["exp"], Fraction(int(t["num"]), den)))
        except (KeyError, TypeError) as exc:
            raise NodalQuarticError(f"malformed polynomial document: {exc}") from exc
        return cls(degree, terms)


def evaluate(F: HomogPoly, point: Sequence) -> Fraction:
    """Exact value of F at a point given by four rationals (or integers)."""
    if len(point) != NVARS:
        raise ValueError("points have four coordinates")
    p = [Fraction(x) for x in point]
    total = Fraction(0)
    for e, c in F.items():
        v = c
        for x, k in zip(p, e):
            if k:
                v *= x**k
        total += v
    return total


def gradient(F: HomogPoly) -> tuple[HomogPoly, HomogPoly, HomogPoly, HomogPoly]:
    if F.degree < 1:
        raise ValueError("gradient needs degree >= 1")
    return tuple(F.diff(i) for i in range(NVARS))


def hessian(F: HomogPoly) -> list[list[HomogPoly]]:
    if F.degree < 2:
        raise ValueError("hessian needs degree >= 2")
    g = gradient(F)
    H = [[None] * NVARS for _ in range(NVARS)]
    for i in range(NVARS):
        for j in range(i, NVARS):
            H[i][j] = H[j][i] = g[i].diff(j)
    return H


def variables() -> tuple[HomogPoly, HomogPoly, HomogPoly, HomogPoly]:
    """The coordinate functions x, y, z, w, for building polynomials by hand."""
    return tuple(HomogPoly.variable(i) for i in range(NVARS))


def load_poly(path) -> HomogPoly:
    with open(path, encoding="utf-8") as fh:
        return HomogPoly.from_json_dict(json.load(fh))


def dump_poly(F: HomogPoly, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(F.to_json_dict(), fh, indent=1)
        fh.write("\n")
