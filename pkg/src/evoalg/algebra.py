"""Graphs, evolution algebras and the evolution product.

Vertices are labelled ``1..n`` in anything user-facing (edge lists, reports);
internally rows and columns are 0-based.  A loop contributes 1 to the degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegreeError, DimensionError
from .scalars import ONE, ZERO, RadScalar

GRAPH = "graph"
RANDOM_WALK = "random-walk"
CUSTOM = "custom"


@dataclass(frozen=True)
class Graph:
    """Finite undirected graph with optional loops.

    ``neighbors[i]`` is the set of 0-based neighbours of vertex ``i + 1``
    (including ``i`` itself when there is a loop).
    """

    n: int
    neighbors: tuple
    name: str = ""
    approximate: bool = False

    def __post_init__(self):
        if len(self.neighbors) != self.n:
            raise DimensionError(f"expected {self.n} neighbour sets, got {len(self.neighbors)}")
        for i, nb in enumerate(self.neighbors):
            for k in nb:
                if i not in self.neighbors[k]:
                    raise ValueError(f"adjacency not symmetric at ({i + 1}, {k + 1})")

    @classmethod
    def from_edges(cls, n: int, edges, name: str = "", approximate: bool = False) -> "Graph":
        """Build from 1-based ``(u, v)`` pairs; duplicates collapse."""
        nb = [set() for _ in range(n)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{n}")
            nb[u - 1].add(v - 1)
            nb[v - 1].add(u - 1)
        return cls(n, tuple(frozenset(s) for s in nb), name=name, approximate=approximate)

    @property
    def degrees(self) -> tuple:
        return tuple(len(nb) for nb in self.neighbors)

    def adjacency(self) -> list:
        """Dense 0/1 adjacency matrix as a list of lists."""
        return [[1 if k in self.neighbors[i] else 0 for k in range(self.n)] for i in range(self.n)]

    def edges(self) -> list:
        """Sorted 1-based edges ``(u, v)`` with ``u <= v``."""
        return sorted((i + 1, k + 1) for i in range(self.n) for k in self.neighbors[i] if i <= k)

    @property
    def edge_count(self) -> int:
        return len(self.edges())

    def regular_degree(self):
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


@dataclass(frozen=True)
class EvolutionAlgebra:
    """Evolution algebra with natural basis ``e_1..e_n``.

    ``rows[i]`` is a sparse map ``k -> c_ik`` holding the nonzero
    coefficients of ``e_{i+1}^2``.
    """

    n: int
    rows: tuple
    kind: str = CUSTOM
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            for k, c in row.items():
                if not 0 <= k < self.n:
                    raise DimensionError(f"row {i + 1} references e_{k + 1} outside 1..{self.n}")
                if not isinstance(c, RadScalar) or c.is_zero():
                    raise ValueError(f"row {i + 1}: coefficients must be nonzero RadScalars")
        if self.kind == GRAPH:
            for i, row in enumerate(self.rows):
                for k, c in row.items():
                    if c != 1 or self.rows[k].get(i) != c:
                        raise ValueError(f"graph algebra entry ({i + 1}, {k + 1}) not symmetric 0/1")
        elif self.kind == RANDOM_WALK:
            for i, row in enumerate(self.rows):
                total = Fraction(0)
                for c in row.values():
                    q = c.as_fraction()
                    if q < 0:
                        raise ValueError(f"negative transition weight in row {i + 1}")
                    total += q
                if total != 1:
                    raise ValueError(f"row {i + 1} sums to {total}, not 1")

    @classmethod
    def from_matrix(cls, matrix, kind: str = CUSTOM, label: str = "") -> "EvolutionAlgebra":
        n = len(matrix)
        rows = []
        for i, r in enumerate(matrix):
            if len(r) != n:
                raise DimensionError(f"row {i + 1} has length {len(r)}, expected {n}")
            rows.append({k: RadScalar.coerce(c) for k, c in enumerate(r) if c != 0})
        return cls(n, tuple(rows), kind=kind, label=label)

    def entry(self, i: int, k: int) -> RadScalar:
        return self.rows[i].get(k, ZERO)

    def structure(self) -> list:
        """Dense structure matrix ``c_ik`` (row i = coefficients of e_i^2)."""
        return [[self.entry(i, k) for k in range(self.n)] for i in range(self.n)]

    def is_rational(self) -> bool:
        return all(c.is_rational() for row in self.rows for c in row.values())


def algebra_from_graph(G: Graph) -> EvolutionAlgebra:
    rows = tuple({k: ONE for k in sorted(nb)} for nb in G.neighbors)
    return EvolutionAlgebra(G.n, rows, kind=GRAPH, label=f"A({G.name or 'G'})")


def algebra_from_random_walk(G: Graph) -> EvolutionAlgebra:
    """Structure constants ``a_ik / d_i`` of the simple random walk."""
    rows = []
    for i, nb in enumerate(G.neighbors):
        if not nb:
            raise DegreeError(f"vertex {i + 1} is isolated (degree 0); random walk undefined")
        p = RadScalar.from_rational(Fraction(1, len(nb)))
        rows.append({k: p for k in sorted(nb)})
    return EvolutionAlgebra(G.n, tuple(rows), kind=RANDOM_WALK, label=f"A_RW({G.name or 'G'})")


@dataclass(frozen=True)
class AlgebraElement:
    """Coordinates over the natural basis."""

    coords: tuple

    @classmethod
    def basis(cls, n: int, i: int) -> "AlgebraElement":
        """The basis vector ``e_{i+1}`` (0-based ``i``)."""
        return cls(tuple(ONE if k == i else ZERO for k in range(n)))

    @classmethod
    def of(cls, values) -> "AlgebraElement":
        return cls(tuple(RadScalar.coerce(v) for v in values))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other):
        if len(other) != len(self):
            raise DimensionError("length mismatch")
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "AlgebraElement":
        return AlgebraElement(tuple(c * s for c in self.coords))


def sparse_product(u: dict, v: dict, A: EvolutionAlgebra) -> dict:
    """Evolution product of sparse coordinate maps ``{index: scalar}``."""
    out = {}
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    for i, ui in small.items():
        vi = big.get(i)
        if vi is None:
            continue
        w = ui * vi
        if w.is_zero():
            continue
        for k, c in A.rows[i].items():
            s = out.get(k, ZERO) + w * c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def evolution_product(u: AlgebraElement, v: AlgebraElement, A: EvolutionAlgebra) -> AlgebraElement:
    """``(u o v)_k = sum_i u_i v_i c_ik``."""
    if len(u) != A.n or len(v) != A.n:
        raise DimensionError(f"elements of length {len(u)}, {len(v)} in an algebra of dimension {A.n}")
    su = {i: c for i, c in enumerate(u.coords) if not c.is_zero()}
    sv = {i: c for i, c in enumerate(v.coords) if not c.is_zero()}
    prod = sparse_product(su, sv, A)
    return AlgebraElement(tuple(prod.get(k, ZERO) for k in range(A.n)))
