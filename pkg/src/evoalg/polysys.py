"""Sparse polynomials over Q in the map entries ``t[i][k]`` and the
product-preservation constraint system of a candidate homomorphism.

Variables are 0-based pairs ``(i, k)``; text output is 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import EvolutionAlgebra
from .errors import DimensionError, EvaluationError, UnsupportedError
from .scalars import ONE, ZERO, RadScalar

# A monomial is a sorted tuple of ((i, k), exponent) pairs with exponent >= 1.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable sparse polynomial ``{monomial: Fraction}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, i: int, k: int) -> "Poly":
        return cls({(((i, k), 1),): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            q = Fraction(other)
            return Poly({m: c * q for m, c in self.terms.items()})
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"Poly('{poly_to_text(self)}')"


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _mono_text(m: Monomial) -> str:
    parts = []
    for (i, k), e in m:
        parts.append(f"t[{i + 1}][{k + 1}]" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def poly_to_text(p: Poly) -> str:
    """Canonical text ``coeff*t[i][k]*t[j][l] + ...`` in lexicographic
    monomial order; the coefficient is always written."""
    if not p.terms:
        return "0"
    out = []
    for idx, m in enumerate(sorted(p.terms)):
        c = p.terms[m]
        body = str(abs(c)) if not m else f"{abs(c)}*{_mono_text(m)}"
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def poly_eval_rad(p: Poly, assignment) -> RadScalar:
    """Exact value of ``p`` with every variable replaced by a RadScalar."""
    total = ZERO
    for m, c in p.terms.items():
        term = ONE
        for v, e in m:
            try:
                x = assignment[v]
            except (KeyError, IndexError):
                raise EvaluationError(f"no value for t[{v[0] + 1}][{v[1] + 1}]") from None
            term = term * RadScalar.coerce(x) ** e
        total = total + term * c
    return total


@dataclass(frozen=True)
class HomSystem:
    """Product-preservation constraints for maps ``A -> B``.

    ``orthogonality[(i, j, l)]`` (``i < j``) is coordinate ``l`` of
    ``g(e_i) g(e_j)``; ``squares[(i, l)]`` is coordinate ``l`` of
    ``g(e_i) g(e_i) - g(e_i^2)``.  Keys are 0-based and the dicts are in
    lexicographic key order.
    """

    n: int
    orthogonality: dict
    squares: dict

    def polynomials(self):
        yield from self.orthogonality.values()
        yield from self.squares.values()

    def to_text(self) -> str:
        lines = []
        for (i, j, l), p in self.orthogonality.items():
            lines.append(f"orth[{i + 1},{j + 1}][{l + 1}]: {poly_to_text(p)}")
        for (i, l), p in self.squares.items():
            lines.append(f"square[{i + 1}][{l + 1}]: {poly_to_text(p)}")
        return "\n".join(lines)


def _rational_rows(A: EvolutionAlgebra, role: str):
    rows = []
    for i, row in enumerate(A.rows):
        r = {}
        for k, c in row.items():
            if not c.is_rational():
                raise UnsupportedError(
                    f"{role} structure constant c[{i + 1}][{k + 1}] = {c} is irrational; "
                    "constraint systems need rational coefficients")
            r[k] = c.as_fraction()
        rows.append(r)
    return rows


def generate_hom_system(A: EvolutionAlgebra, B: EvolutionAlgebra) -> HomSystem:
    if A.n != B.n:
        raise DimensionError(f"domain has dimension {A.n}, codomain {B.n}")
    n = A.n
    c = _rational_rows(A, "domain")
    cp = _rational_rows(B, "codomain")
    # column view of the codomain: l -> [(k, c'_kl)]
    cols = [[] for _ in range(n)]
    for k in range(n):
        for l, v in sorted(cp[k].items()):
            cols[l].append((k, v))

    orth = {}
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(n):
                terms = {}
                for k, v in cols[l]:
                    terms[tuple(sorted((((i, k), 1), ((j, k), 1))))] = v
                orth[(i, j, l)] = Poly(terms)
    squares = {}
    for i in range(n):
        for l in range(n):
            terms = {}
            for k, v in cols[l]:
                terms[(((i, k), 2),)] = v
            for k, v in c[i].items():
                m = (((k, l), 1),)
                terms[m] = terms.get(m, 0) - v
            squares[(i, l)] = Poly(terms)
    return HomSystem(n, orth, squares)
