"""Exact homomorphisms between evolution algebras.

* witness constructors for regular and complete bipartite graphs,
* exact verification of product preservation and invertibility,
* exhaustive search over monomial maps ``g(e_i) = alpha_i e_{pi(i)}``,
* the complete multipartite survey.

All arithmetic is in :class:`~evoalg.scalars.RadScalar`; nothing here uses
floating point.
"""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from .algebra import EvolutionAlgebra, Graph, algebra_from_graph, algebra_from_random_walk, sparse_product
from .errors import DimensionError, IngestionError, RegularityError, ScalarDomainError, SpecError, UnsupportedError
from .scalars import ZERO, RadScalar, format_scalar, parse_scalar, rad_canonicalize

YES, NO, UNDETERMINED = "yes", "no", "undetermined"

DETERMINANT_MAX_N = 12
SOLVER_MAX_N = 12


# -- maps ---------------------------------------------------------------------


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a linear map: ``rows[i]`` is the sparse map ``k -> t_ik``,
    the coefficient of ``e_k`` in ``g(e_i)`` (0-based)."""

    n: int
    rows: tuple

    @classmethod
    def from_matrix(cls, matrix) -> "LinearMap":
        n = len(matrix)
        rows = []
        for i, r in enumerate(matrix):
            if len(r) != n:
                raise DimensionError(f"map row {i + 1} has length {len(r)}, expected {n}")
            rows.append({k: RadScalar.coerce(v) for k, v in enumerate(r) if v != 0})
        return cls(n, tuple(rows))

    @classmethod
    def diagonal(cls, scalars) -> "LinearMap":
        scalars = [RadScalar.coerce(s) for s in scalars]
        return cls(len(scalars), tuple({i: s} if s else {} for i, s in enumerate(scalars)))

    def entry(self, i, k) -> RadScalar:
        return self.rows[i].get(k, ZERO)

    def matrix(self) -> list:
        return [[self.entry(i, k) for k in range(self.n)] for i in range(self.n)]

    def to_floats(self):
        import numpy as np

        out = np.zeros((self.n, self.n))
        for i, row in enumerate(self.rows):
            for k, v in row.items():
                out[i, k] = float(v)
        return out

    def monomial_shape(self):
        """``(targets, scales)`` if every row has at most one nonzero entry,
        else ``None``.  ``targets[i]`` is ``None`` for a zero row."""
        targets, scales = [], []
        for row in self.rows:
            if len(row) > 1:
                return None
            if row:
                (k, v), = row.items()
                targets.append(k)
                scales.append(v)
            else:
                targets.append(None)
                scales.append(ZERO)
        return tuple(targets), tuple(scales)

    def to_text(self) -> str:
        """One row per line, entries in scalar text separated by ``', '``."""
        return "\n".join(", ".join(format_scalar(v) for v in r) for r in self.matrix())

    @classmethod
    def parse(cls, text: str) -> "LinearMap":
        """Inverse of :meth:`to_text`; also accepts a JSON list of lists."""
        stripped = text.strip()
        if stripped.startswith("["):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise IngestionError(f"bad JSON map: {exc.msg}", exc.lineno) from None
            rows = [[parse_scalar(str(v)) for v in r] for r in data]
        else:
            rows = []
            for lineno, line in enumerate(text.splitlines(), start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    rows.append([parse_scalar(tok) for tok in line.split(",")])
                except SpecError as exc:
                    raise IngestionError(str(exc), lineno) from None
        if not rows:
            raise IngestionError("empty map")
        try:
            return cls.from_matrix(rows)
        except DimensionError as exc:
            raise IngestionError(str(exc)) from None


@dataclass(frozen=True)
class MonomialMap:
    """``g(e_i) = scale[i] * e_{target[i]}``; ``target[i] is None`` means
    ``g(e_i) = 0``."""

    target: tuple
    scale: tuple

    def __post_init__(self):
        if len(self.target) != len(self.scale):
            raise DimensionError("target and scale lengths differ")
        object.__setattr__(self, "scale", tuple(RadScalar.coerce(s) for s in self.scale))
        for t, s in zip(self.target, self.scale):
            if (t is None) != s.is_zero():
                raise ValueError("a target is required exactly where the scale is nonzero")

    @property
    def n(self):
        return len(self.target)

    def to_linear_map(self) -> LinearMap:
        return LinearMap(self.n, tuple({} if t is None else {t: s} for t, s in zip(self.target, self.scale)))

    def sort_key(self):
        return (tuple(-1 if t is None else t for t in self.target), tuple(format_scalar(s) for s in self.scale))

    def describe(self) -> str:
        parts = []
        for i, (t, s) in enumerate(zip(self.target, self.scale)):
            parts.append(f"e{i + 1}->0" if t is None else f"e{i + 1}->({format_scalar(s)})*e{t + 1}")
        return "; ".join(parts)

    def to_dict(self) -> dict:
        return {
            "targets": [None if t is None else t + 1 for t in self.target],
            "scales": [format_scalar(s) for s in self.scale],
        }


@dataclass
class HomVerdict:
    product_preserving: bool
    natural_basis_extendable: str
    is_isomorphism: str
    certificate: list = field(default_factory=list)
    violation: dict | None = None

    def to_dict(self) -> dict:
        return {
            "product_preserving": self.product_preserving,
            "natural_basis_extendable": self.natural_basis_extendable,
            "is_isomorphism": self.is_isomorphism,
            "certificate": list(self.certificate),
            "violation": self.violation,
        }


# -- witnesses ----------------------------------------------------------------


def build_regular_witness(G: Graph) -> LinearMap:
    """``g(e_i) = d e_i`` for a d-regular graph."""
    degs = G.degrees
    d = G.regular_degree()
    if d is None:
        i = 0
        j = next(k for k in range(G.n) if degs[k] != degs[0])
        raise RegularityError(
            f"graph is not regular: vertex {i + 1} has degree {degs[i]}, vertex {j + 1} has degree {degs[j]}")
    if d < 1:
        raise RegularityError("graph has no edges (0-regular)")
    return LinearMap.diagonal([d] * G.n)


def bipartite_scalars(m: int, n: int) -> tuple:
    """``(m^(1/3) n^(2/3), m^(2/3) n^(1/3))`` in canonical form."""
    if m < 1 or n < 1:
        raise ValueError("part sizes must be positive")
    return rad_canonicalize(1, m * n * n, 3), rad_canonicalize(1, m * m * n, 3)


def build_bipartite_witness(m: int, n: int) -> LinearMap:
    """Witness for K_{m,n} with parts {1..m} and {m+1..m+n}."""
    a, b = bipartite_scalars(m, n)
    return LinearMap.diagonal([a] * m + [b] * n)


def complete_bipartite_parts(G: Graph):
    """The two parts (sorted 0-based tuples) if G is complete bipartite."""
    if G.n < 2:
        return None
    colour = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in G.neighbors[v]:
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return None
    if len(colour) != G.n:
        return None
    parts = (tuple(v for v in range(G.n) if colour[v] == 0), tuple(v for v in range(G.n) if colour[v] == 1))
    if not parts[1]:
        return None
    for v in parts[0]:
        if len(G.neighbors[v]) != len(parts[1]):
            return None
    for v in parts[1]:
        if len(G.neighbors[v]) != len(parts[0]):
            return None
    return parts


def bipartite_witness_for(G: Graph) -> LinearMap | None:
    parts = complete_bipartite_parts(G)
    if parts is None:
        return None
    p, q = parts
    a, b = bipartite_scalars(len(p), len(q))
    scal = [None] * G.n
    for v in p:
        scal[v] = a
    for v in q:
        scal[v] = b
    return LinearMap.diagonal(scal)


def witness_for(G: Graph):
    """Pick an applicable constructor: ``(map, kind)`` or ``None``."""
    if G.regular_degree() not in (None, 0):
        return build_regular_witness(G), "regular"
    T = bipartite_witness_for(G)
    if T is not None:
        return T, "complete-bipartite"
    return None


# -- verification -------------------------------------------------------------


def _vector_text(vec: dict) -> str:
    if not vec:
        return "0"
    parts = []
    for k in sorted(vec):
        c = vec[k]
        s = format_scalar(c)
        parts.append(f"e{k + 1}" if s == "1" else f"({s})*e{k + 1}")
    return " + ".join(parts)


def _apply(T: LinearMap, vec: dict) -> dict:
    """``T`` applied to a sparse coordinate vector over the domain basis."""
    out = {}
    for i, c in vec.items():
        for k, t in T.rows[i].items():
            s = out.get(k, ZERO) + c * t
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _check_products(T: LinearMap, A: EvolutionAlgebra, B: EvolutionAlgebra):
    """Return ``(checked, violation)``; violation is None when all hold."""
    n = A.n
    # only pairs sharing a coordinate can have a nonzero product
    by_column = {}
    for i, row in enumerate(T.rows):
        for k in row:
            by_column.setdefault(k, []).append(i)
    pairs = set()
    for rows in by_column.values():
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                pairs.add((rows[a], rows[b]))
    for i, j in sorted(pairs):
        prod = sparse_product(T.rows[i], T.rows[j], B)
        if prod:
            return None, {
                "kind": "orthogonality", "i": i + 1, "j": j + 1,
                "expected": "0", "actual": _vector_text(prod),
                "message": f"g(e{i + 1})*g(e{j + 1}) = {_vector_text(prod)}, expected 0",
            }
    for i in range(n):
        image_of_square = _apply(T, A.rows[i])
        square_of_image = sparse_product(T.rows[i], T.rows[i], B)
        if image_of_square != square_of_image:
            return None, {
                "kind": "square", "i": i + 1,
                "expected": _vector_text(image_of_square), "actual": _vector_text(square_of_image),
                "message": (f"g(e{i + 1}^2) = {_vector_text(image_of_square)} but "
                            f"g(e{i + 1})^2 = {_vector_text(square_of_image)}"),
            }
    return [f"g(e_i)*g(e_j) = 0 for all {n * (n - 1) // 2} pairs i<j",
            f"g(e_i^2) = g(e_i)*g(e_i) for all {n} basis vectors"], None


def _natural_basis_status(T: LinearMap) -> str:
    shape = T.monomial_shape()
    if shape is None:
        return UNDETERMINED
    targets = [t for t in shape[0] if t is not None]
    return YES if len(targets) == len(set(targets)) else UNDETERMINED


def verify_homomorphism(T: LinearMap, A: EvolutionAlgebra, B: EvolutionAlgebra) -> HomVerdict:
    if not (T.n == A.n == B.n):
        raise DimensionError(f"map of size {T.n} between algebras of dimension {A.n} and {B.n}")
    checked, violation = _check_products(T, A, B)
    if violation is not None:
        return HomVerdict(False, _natural_basis_status(T), NO, [violation["message"]], violation)
    return HomVerdict(True, _natural_basis_status(T), UNDETERMINED, checked)


def determinant(M) -> RadScalar:
    """Division-free determinant by Laplace expansion memoised on column
    subsets (2^n states)."""
    M = [[RadScalar.coerce(x) for x in row] for row in M]
    n = len(M)
    if n == 0:
        return RadScalar.from_rational(1)
    memo = {}

    def det(row, cols):
        if row == n:
            return RadScalar.from_rational(1)
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = ZERO
        sign = 1
        for c in range(n):
            if not cols >> c & 1:
                continue
            v = M[row][c]
            if not v.is_zero():
                sub = det(row + 1, cols & ~(1 << c))
                if not sub.is_zero():
                    total = total + v * sub * sign
            sign = -sign
        memo[cols] = total
        return total

    return det(0, (1 << n) - 1)


def invertibility(T: LinearMap) -> tuple[str, str]:
    shape = T.monomial_shape()
    if shape is not None:
        targets, _ = shape
        if None in targets:
            return NO, "a basis vector is sent to 0"
        if len(set(targets)) != T.n:
            return NO, "pi is not a bijection"
        return YES, "monomial map with bijective pi and nonzero scales"
    if T.n > DETERMINANT_MAX_N:
        return UNDETERMINED, f"non-monomial map with n > {DETERMINANT_MAX_N}"
    det = determinant(T.matrix())
    if det.is_zero():
        return NO, "determinant is 0"
    return YES, f"determinant = {format_scalar(det)}"


def verify_isomorphism(T: LinearMap, A: EvolutionAlgebra, B: EvolutionAlgebra) -> HomVerdict:
    verdict = verify_homomorphism(T, A, B)
    if not verdict.product_preserving:
        return verdict
    status, reason = invertibility(T)
    verdict.is_isomorphism = status
    verdict.certificate.append(f"invertibility: {reason}")
    return verdict


# -- monomial search ----------------------------------------------------------


@dataclass
class MonomialSearchResult:
    solutions: list
    search_class: str = "monomial"
    includes_null: bool = True
    outside_domain: list = field(default_factory=list)
    parametric: list = field(default_factory=list)
    truncated: bool = False
    timed_out: bool = False
    nodes: int = 0
    leaves: int = 0
    elapsed_ms: float = 0.0

    @property
    def complete(self) -> bool:
        return not (self.truncated or self.timed_out or self.outside_domain or self.parametric)

    @property
    def null_only(self) -> bool:
        return self.complete and not self.solutions

    def to_dict(self) -> dict:
        return {
            "class": self.search_class,
            "includes_null_map": self.includes_null,
            "null_only": self.null_only,
            "complete": self.complete,
            "solutions": [s.to_dict() for s in self.solutions],
            "outside_scalar_domain": self.outside_domain,
            "parametric_branches": self.parametric,
            "truncated": self.truncated,
            "timed_out": self.timed_out,
            "nodes": self.nodes,
            "leaves": self.leaves,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


class _Budget(Exception):
    pass


class _Enough(Exception):
    pass


def _solve_log_system(size, equations):
    """Solve ``x_k - 2 x_i = v`` over Q, where each ``v`` is a dict
    prime -> exponent.  Returns ``(status, solution)`` with status one of
    ``unique``, ``inconsistent``, ``underdetermined``."""
    rows = []
    for k, i, v in equations:
        coef = [Fraction(0)] * size
        coef[k] += 1
        coef[i] -= 2
        rows.append((coef, dict(v)))
    pivots = []
    r = 0
    for col in range(size):
        piv = next((j for j in range(r, len(rows)) if rows[j][0][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pc, pv = rows[r]
        inv = 1 / pc[col]
        pc = [x * inv for x in pc]
        pv = {p: e * inv for p, e in pv.items()}
        rows[r] = (pc, pv)
        for j in range(len(rows)):
            if j != r and rows[j][0][col]:
                f = rows[j][0][col]
                jc, jv = rows[j]
                jc = [a - f * b for a, b in zip(jc, pc)]
                jv = dict(jv)
                for p, e in pv.items():
                    s = jv.get(p, 0) - f * e
                    if s:
                        jv[p] = s
                    else:
                        jv.pop(p, None)
                rows[j] = (jc, jv)
        pivots.append(col)
        r += 1
    for coef, v in rows[r:]:
        if any(v.values()):
            return "inconsistent", None
    if r < size:
        return "underdetermined", None
    solution = [None] * size
    for idx, col in enumerate(pivots):
        solution[col] = rows[idx][1]
    return "unique", solution


class _MonomialSearch:
    def __init__(self, A, B, max_solutions, deadline):
        self.A, self.B = A, B
        self.n = n = A.n
        self.max_solutions = max_solutions
        self.deadline = deadline
        self.a_out = [set(A.rows[i]) for i in range(n)]            # k with c_ik != 0
        self.a_in = [{i for i in range(n) if k in A.rows[i]} for k in range(n)]
        self.b_out = [set(B.rows[t]) for t in range(n)]            # l with c'_tl != 0
        self.exclusive = [bool(B.rows[t]) for t in range(n)]       # nonzero e_t^2
        self.pi = [-1] * n                                          # -1 unassigned, None zero
        self.owner = {}                                             # exclusive target -> vertex
        self.result = MonomialSearchResult(solutions=[])

    # pi[i] == -1 : unassigned
    def _ok(self, v) -> bool:
        pi = self.pi
        tv = pi[v]
        assigned = lambda x: pi[x] != -1  # noqa: E731
        # a vertex k in the support with exclusive target l = pi[k] forces,
        # for every i with c_ik != 0: i in support and c'_{pi(i), l} != 0
        def edge_ok(i, k):
            tk = pi[k]
            if tk is None or not self.exclusive[tk]:
                return True
            ti = pi[i]
            return ti is not None and tk in self.b_out[ti]

        for k in self.a_out[v]:
            if assigned(k) and not edge_ok(v, k):
                return False
        for i in self.a_in[v]:
            if assigned(i) and not edge_ok(i, v):
                return False
        # every l with c'_{pi(i), l} != 0 needs a preimage k with c_ik != 0
        for i in range(self.n):
            ti = pi[i]
            if ti is None or ti == -1:
                continue
            nbrs = self.a_out[i]
            complete = all(assigned(k) for k in nbrs)
            for l in self.b_out[ti]:
                owner = self.owner.get(l)
                if owner is not None:
                    if owner not in nbrs:
                        return False
                    continue
                if complete and not any(pi[k] == l for k in nbrs):
                    return False
        return True

    def run(self):
        try:
            self._extend(0)
        except _Budget:
            self.result.timed_out = True
        except _Enough:
            self.result.truncated = True
        self.result.solutions.sort(key=MonomialMap.sort_key)
        return self.result

    def _extend(self, v):
        self.result.nodes += 1
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Budget
        if v == self.n:
            self._leaf()
            return
        for t in [None] + list(range(self.n)):
            if t is not None and self.exclusive[t] and t in self.owner:
                continue
            self.pi[v] = t
            if t is not None and self.exclusive[t]:
                self.owner[t] = v
            if self._ok(v):
                self._extend(v + 1)
            if t is not None and self.exclusive[t]:
                del self.owner[t]
        self.pi[v] = -1

    def _leaf(self):
        self.result.leaves += 1
        pi = self.pi
        n = self.n
        support = [i for i in range(n) if pi[i] is not None]
        if not support:
            return  # null map, reported implicitly
        index = {v: j for j, v in enumerate(support)}
        equations = []
        fixed_sign = {}
        branch = [None if t is None else t + 1 for t in pi]
        for i in range(n):
            ti = pi[i]
            for l in range(n):
                lhs = self.B.entry(ti, l) if ti is not None else ZERO
                rhs = [(k, self.A.entry(i, k)) for k in support if pi[k] == l and k in self.a_out[i]]
                if lhs.is_zero() and not rhs:
                    continue
                if len(rhs) > 1:
                    self.result.outside_domain.append(
                        {"targets": branch, "reason": f"coordinate {l + 1} of g(e{i + 1}^2) mixes several scales"})
                    return
                if lhs.is_zero() or not rhs:
                    return  # alpha != 0 makes one side nonzero
                k, c = rhs[0]
                if not (lhs.is_monomial() and c.is_monomial()):
                    self.result.outside_domain.append(
                        {"targets": branch, "reason": f"non-monomial structure constant at ({i + 1}, {l + 1})"})
                    return
                # alpha_k = (c' / c) alpha_i^2
                ratio = lhs * c.inverse()
                sign, exps = ratio.prime_exponents()
                if fixed_sign.setdefault(k, sign) != sign:
                    return
                equations.append((index[k], index[i], exps))
        status, sol = _solve_log_system(len(support), equations)
        if status == "inconsistent":
            return
        if status == "underdetermined":
            self.result.parametric.append({"targets": branch, "reason": "scales not determined by the equations"})
            return
        free = [v for v in support if v not in fixed_sign]
        for signs in cartesian((1, -1), repeat=len(free)):
            sign_of = dict(fixed_sign)
            sign_of.update(zip(free, signs))
            scales = [ZERO] * n
            for v in support:
                scales[v] = RadScalar.from_prime_exponents(sign_of[v], sol[index[v]])
            cand = MonomialMap(tuple(pi), tuple(scales))
            verdict = verify_homomorphism(cand.to_linear_map(), self.A, self.B)
            if not verdict.product_preserving:  # pragma: no cover - would be a solver bug
                raise AssertionError(f"solver produced a non-homomorphism: {cand.describe()}")
            self.result.solutions.append(cand)
            if self.max_solutions is not None and len(self.result.solutions) >= self.max_solutions:
                raise _Enough


def solve_monomial_homs(A: EvolutionAlgebra, B: EvolutionAlgebra, max_solutions=None,
                        time_budget=None, max_n: int = SOLVER_MAX_N) -> MonomialSearchResult:
    """Every product-preserving map of shape ``g(e_i) = alpha_i e_{pi(i)}``.

    ``pi`` ranges over all functions (with ``alpha_i = 0`` branches), so the
    result is complete for the monomial class.  The null map is always a
    solution and is not listed.  ``time_budget`` is in seconds.
    """
    if A.n != B.n:
        raise DimensionError(f"domain has dimension {A.n}, codomain {B.n}")
    if A.n > max_n:
        raise UnsupportedError(f"monomial enumeration is limited to n <= {max_n} (got {A.n})")
    start = time.perf_counter()
    deadline = None if time_budget is None else start + time_budget
    result = _MonomialSearch(A, B, max_solutions, deadline).run()
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


# -- complete multipartite survey ----------------------------------------------

WITNESS = "WITNESS"
NULL_ONLY = "NULL-ONLY-MONOMIAL"
UNDETERMINED_CLASS = "UNDETERMINED"


@dataclass
class SurveyRow:
    parts: tuple
    classification: str
    witness_scalars: list
    elapsed_ms: float
    method: str
    certificate: dict | None = None

    def to_dict(self) -> dict:
        return {
            "parts": list(self.parts),
            "classification": self.classification,
            "witness_scalars": list(self.witness_scalars),
            "elapsed_ms": round(self.elapsed_ms, 3),
            "method": self.method,
            "certificate": self.certificate,
        }


@dataclass
class SurveyReport:
    rows: list

    def to_dict(self) -> dict:
        return {"class": "monomial", "rows": [r.to_dict() for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["parts", "classification", "witness-scalars", "elapsed-ms"])
        for r in self.rows:
            w.writerow([",".join(map(str, r.parts)), r.classification,
                        ";".join(r.witness_scalars), f"{r.elapsed_ms:.3f}"])
        return buf.getvalue()


def partitions_up_to(total: int, min_parts: int = 2) -> list:
    """All multisets of positive part sizes with at least ``min_parts``
    parts and sum <= total, as sorted tuples."""
    out = []

    def rec(prefix, remaining, smallest):
        if len(prefix) >= min_parts:
            out.append(tuple(prefix))
        for p in range(smallest, remaining + 1):
            rec(prefix + [p], remaining - p, p)

    rec([], total, 1)
    return sorted(out, key=lambda t: (sum(t), len(t), t))


def classify_multipartite(parts, time_budget=None) -> SurveyRow:
    from .families import FamilySpec, build_family

    parts = tuple(sorted(parts))
    start = time.perf_counter()
    G = build_family(FamilySpec("npartite", parts))
    A, B = algebra_from_graph(G), algebra_from_random_walk(G)

    def row(cls, scalars, method, cert):
        return SurveyRow(parts, cls, scalars, (time.perf_counter() - start) * 1000, method, cert)

    T, method = None, None
    if len(set(parts)) == 1:
        T, method = build_regular_witness(G), "regular-constructor"
    elif len(parts) == 2:
        T, method = build_bipartite_witness(*parts), "bipartite-constructor"
    if T is not None:
        verdict = verify_isomorphism(T, A, B)
        if verdict.is_isomorphism == YES:
            scal = sorted({format_scalar(T.entry(i, i)) for i in range(G.n)})
            return row(WITNESS, scal, method, verdict.to_dict())
    if G.n > SOLVER_MAX_N:
        return row(UNDETERMINED_CLASS, [], "size-limit", None)
    res = solve_monomial_homs(A, B, time_budget=time_budget)
    for sol in res.solutions:
        verdict = verify_isomorphism(sol.to_linear_map(), A, B)
        if verdict.is_isomorphism == YES:
            scal = sorted({format_scalar(s) for s in sol.scale})
            return row(WITNESS, scal, "monomial-solver", verdict.to_dict())
    if res.null_only:
        return row(NULL_ONLY, [], "monomial-solver", None)
    return row(UNDETERMINED_CLASS, [], "monomial-solver", None)


def npartite_survey(parts_list, time_budget=None) -> SurveyReport:
    """Classify each ``K_{a_1,...,a_k}``; duplicates (as multisets) are
    surveyed once, rows are keyed by sorted part sizes."""
    seen = {}
    for parts in parts_list:
        key = tuple(sorted(parts))
        if key not in seen:
            seen[key] = classify_multipartite(key, time_budget=time_budget)
    return SurveyReport([seen[k] for k in sorted(seen, key=lambda t: (sum(t), len(t), t))])
