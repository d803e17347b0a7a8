"""The random walk on a graph as a Markov chain, in exact arithmetic."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Graph
from .errors import ConnectivityError, DegreeError, DimensionError, SpecError
from .rng import SplitMix64


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    rows: tuple  # n tuples of n Fractions


def transition_matrix(G: Graph) -> TransitionMatrix:
    """``p_ik = a_ik / d_i``."""
    rows = []
    for i, nb in enumerate(G.neighbors):
        if not nb:
            raise DegreeError(f"vertex {i + 1} is isolated (degree 0); random walk undefined")
        p = Fraction(1, len(nb))
        rows.append(tuple(p if k in nb else Fraction(0) for k in range(G.n)))
    return TransitionMatrix(G.n, tuple(rows))


def distribution_step(p0, P: TransitionMatrix, k: int = 1) -> tuple:
    """Exact ``p0 P^k``."""
    if len(p0) != P.n:
        raise DimensionError(f"distribution of length {len(p0)} for a chain on {P.n} states")
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = tuple(Fraction(x) for x in p0)
    for _ in range(k):
        nxt = [Fraction(0)] * P.n
        for i, pi in enumerate(p):
            if pi:
                for j, pij in enumerate(P.rows[i]):
                    if pij:
                        nxt[j] += pi * pij
        p = tuple(nxt)
    return p


def stationary_distribution(G: Graph) -> tuple:
    """Unique ``pi`` with ``pi P = pi`` and ``sum(pi) = 1``, by exact
    Gauss-Jordan elimination."""
    P = transition_matrix(G)
    if not G.is_connected():
        raise ConnectivityError("graph is disconnected; stationary distribution is not unique")
    n = P.n
    # unknown pi; equations sum_i pi_i (P_ij - delta_ij) = 0 for j < n-1, sum pi = 1
    rows = []
    for j in range(n - 1):
        rows.append([P.rows[i][j] - (1 if i == j else 0) for i in range(n)] + [Fraction(0)])
    rows.append([Fraction(1)] * n + [Fraction(1)])
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            f = rows[r][col]
            if r != col and f:
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(rows[i][n] for i in range(n))


@dataclass(frozen=True)
class WalkTrace:
    seed: int
    start: int
    steps: int
    visit_counts: tuple
    final: int

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "start": self.start,
            "steps": self.steps,
            "visit_counts": list(self.visit_counts),
            "final": self.final,
            "generator": "splitmix64",
        }

    def visits_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["vertex", "visits"])
        for v, c in enumerate(self.visit_counts, start=1):
            w.writerow([v, c])
        return buf.getvalue()


def simulate_walk(G: Graph, start: int, steps: int, seed: int) -> WalkTrace:
    """Simple random walk from 1-based ``start``; each step picks a
    neighbour uniformly with ``SplitMix64(seed).below(degree)`` over the
    neighbours in increasing order."""
    if not 1 <= start <= G.n:
        raise SpecError(f"start vertex {start} outside 1..{G.n}")
    if steps < 0:
        raise SpecError("steps must be nonnegative")
    nbrs = [sorted(nb) for nb in G.neighbors]
    for i, nb in enumerate(nbrs):
        if not nb:
            raise DegreeError(f"vertex {i + 1} is isolated (degree 0); random walk undefined")
    rng = SplitMix64(seed)
    counts = [0] * G.n
    v = start - 1
    counts[v] += 1
    below = rng.below
    for _ in range(steps):
        nb = nbrs[v]
        v = nb[below(len(nb))]
        counts[v] += 1
    return WalkTrace(seed, start, steps, tuple(counts), v + 1)
